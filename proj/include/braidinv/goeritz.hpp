#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace braidinv {

using Rational = boost::multiprecision::cpp_rational;

// Symmetric matrix with exact rational entries. set() writes both mirror
// entries, so symmetry holds by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dim);

  int dim() const { return dim_; }
  const Rational& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * dim_ + j];
  }
  void set(int i, int j, Rational v);
  bool operator==(const SymmetricMatrix& o) const = default;

  // One row per line, space-separated exact rationals ("p/q" or integer).
  std::string dump() const;

 private:
  int dim_;
  std::vector<Rational> e_;
};

struct Inertia {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;

  int signature() const { return n_pos - n_neg; }
  bool operator==(const Inertia& o) const = default;
};

// Sign counts of the diagonal after simultaneous row/column reduction over
// the rationals (a congruence, so the counts are the eigenvalue sign counts
// by Sylvester's law).
Inertia inertia(const SymmetricMatrix& m);

// G'(K) and G(K) for the twisted torus knot T(3, 3k+1; 2m), built from the
// closed-form entry rules of its checkerboard projection, plus the
// Gordon-Litherland correction term mu = q + 2m.
struct GoeritzPair {
  SymmetricMatrix full;     // (q+1) x (q+1), every row sums to zero
  SymmetricMatrix goeritz;  // row/column 0 deleted
  int mu = 0;
};

GoeritzPair goeritz_family_matrix(int k, int m);

// The (3l+1) x (3l+1) matrices P_{l,eps} and N_{l,eps}: tridiagonal +1 off a
// -1 diagonal, eps in the last diagonal entry, corner entries (1, 3l+1)
// equal to +1 for P and -1 for N.
SymmetricMatrix make_P(int l, long long eps);
SymmetricMatrix make_N(int l, long long eps);

enum class PNKind { P, N };

// The alternating block reduction P_l ~ B + N_{l-1} ~ B + B + P_{l-2} ~ ...
// down to a 1x1 tail; returns the B-block count (= l) and the tail entry.
struct PNReduction {
  int blocks = 0;
  Rational tail;

  // Each B block contributes inertia (1, 2, 0).
  Inertia implied_inertia() const;
};

PNReduction pn_reduce(int l, long long eps, PNKind kind);

// -4k - 2m - 2 when k is odd and m in {0, 1}; otherwise -4k - 2m.
int signature_closed_form(int k, int m);

// sign(G(K)) - mu via the congruence engine.
int signature_gordon_litherland(int k, int m);

}  // namespace braidinv

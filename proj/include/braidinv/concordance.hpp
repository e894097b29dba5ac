#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/burau.hpp"

namespace braidinv {

// Twisted torus knot T(3, 3k+1; 2m) in standard form (q = 3k+1).
struct TwistedTorusParams {
  int k = 1;
  int m = 0;

  int q() const { return 3 * k + 1; }
  std::string label() const;
  BraidWord word() const;
  bool operator==(const TwistedTorusParams& o) const = default;
};

// Seifert genus and tau of a positive braid knot: 2g - 1 = writhe - n and
// tau = g (fibered, strongly quasipositive).
std::pair<int, int> genus_tau(const BraidWord& b);

// All twisted torus knots of braid index 3 sharing the writhe (hence genus
// and tau) of T(3, q): the base in standard form plus one member per extra
// multiple of 6 shuffled from the torus exponent into the twist region.
std::vector<TwistedTorusParams> same_tau_family(int q);

struct LedgerEntry {
  TwistedTorusParams member;
  int signature = 0;
};

// Closed-form signatures of the family; verifies the descent pattern
// (strictly by 2 each step, except one leading repeat when k is odd).
std::vector<LedgerEntry> signature_ledger(int q);

enum class Obstruction { obstructed, inconclusive };

// Fox-Milnor obstruction via Burau traces for two positive 3-braid words of
// equal writhe whose first closure is a torus knot: unequal traces force
// unequal Alexander polynomials, and a slice connected sum would contradict
// the distinct-cyclotomic factorization of the torus side. Never concludes
// concordance.
Obstruction fox_milnor_trace_obstruction(const BraidWord& base,
                                         const BraidWord& other);

enum class TorusVerdict { same_knot, genus, braid_index };

// Distinctness of positive torus knots in concordance: equal braid index
// pairs separate by genus (= tau); unequal braid indices separate by the
// concordance minimality of the braid index (assumption-flagged citation).
TorusVerdict torus_distinctness(int p1, int q1, int p2, int q2);

struct CableBounds {
  long long braid_lower = 0;   // p * br(K)
  long long braid_exact = 0;   // p * i(K) = i(K_{p,q}) = upper bound for br
  bool equal_if_base_equal = false;
};

CableBounds cable_index_bounds(int p, int q, int br_k, int i_k);

// Both-ends pattern 1 - t + t^n + ... + t^{2g-n} - t^{2g-1} + t^{2g} with
// zero coefficients strictly between 1 and n and between 2g-n and 2g-1.
bool conjecture_form_check(const AlexanderPoly& a, int n, int genus);

struct InvariantRecord {
  std::string label;
  TwistedTorusParams params;
  BraidWord braid;
  int braid_index_bound = 3;
  int writhe = 0;
  int genus = 0;
  int tau = 0;
  int signature = 0;
  AlexanderPoly alexander;
  bool twist_positive = false;
  bool lspace_assumed = false;
  bool torus_knot = false;
};

struct PairVerdict {
  int a = 0;  // member indices
  int b = 0;
  std::string method;  // "signature" | "fox-milnor-trace"
};

struct DistinctnessReport {
  int q = 0;
  int genus_class = 0;
  int tau = 0;
  std::vector<InvariantRecord> members;
  std::vector<PairVerdict> pairs;
  bool pairwise_distinct = false;
  bool obstruction_used = false;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Assembles the same-tau family of T(3, q), distinguishes every pair by
// signature or by the Fox-Milnor trace obstruction, and raises
// std::runtime_error if any pair is left undistinguished.
DistinctnessReport distinctness_report(int q);

}  // namespace braidinv

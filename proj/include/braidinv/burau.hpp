#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/garside.hpp"
#include "braidinv/polymatrix.hpp"

namespace braidinv {

// Reduced Burau matrix of the word: the (n-1)x(n-1) product of the generator
// matrices in letter order. sigma_i(t) is the identity except in row i, with
// (i,i-1) = t, (i,i) = -t, (i,i+1) = 1 (1-based, truncated at the ends);
// inverse letters use the closed-form inverse of that template.
PolyMatrix reduced_burau(const BraidWord& b);

// Alexander polynomial normalized so all degrees are nonnegative, the
// constant term is nonzero, and its sign is positive. `exponents` lists the
// degrees with nonzero coefficient, ascending.
struct AlexanderPoly {
  LaurentPoly poly;
  std::vector<int> exponents;

  static AlexanderPoly normalize(const LaurentPoly& p);
  int degree() const { return exponents.empty() ? 0 : exponents.back(); }
  bool operator==(const AlexanderPoly& o) const = default;
  std::string to_string() const { return poly.to_string(); }
};

// det(I - B(t)) / (1 + t + ... + t^{n-1}), exactly; requires the closure to
// be a knot.
AlexanderPoly alexander(const BraidWord& b);

// prod_{h|p, l|q, h,l != 1} phi_{lh}(t) for coprime p, q >= 2.
AlexanderPoly torus_alexander(int p, int q);

// The divisor multiset {lh} has no repeats (so the torus Alexander
// polynomial is a product of distinct cyclotomics). True for coprime p, q.
bool torus_alexander_squarefree(int p, int q);

// trace(B(0)) == 0; requires a positive word whose closure is a knot.
bool trace_at_zero_is_zero(const BraidWord& b);

struct ExponentGaps {
  std::vector<int> gaps;
  int max_gap = 0;
};
ExponentGaps exponent_gaps(const AlexanderPoly& a);

// Necessary coefficient shape for an L-space knot: nonzero coefficients are
// +-1, strictly alternating, starting and ending at +1.
bool lspace_admissible(const AlexanderPoly& a);

struct ConclusionLine {
  std::string claim;
  std::string status;  // "pass" | "fail" | "inconclusive"
  std::string ref;

  bool operator==(const ConclusionLine& o) const = default;
};

// Coefficient report for Delta = 1 - t + t^n + t^{n+1} R(t).
struct FormReport {
  std::string braid;
  int n = 0;
  int writhe = 0;
  AlexanderPoly alexander;
  std::vector<int> exponents;
  int max_gap = 0;
  bool constant_is_one = false;
  bool linear_is_minus_one = false;
  bool middle_coeffs_vanish = false;
  bool tn_is_one = false;
  bool pass = false;
  std::vector<ConclusionLine> conclusions;

  nlohmann::json to_json() const;
};

FormReport check_twist_positive_form(const BraidWord& b);

// Bridge/braid index certificate from the exponent-gap chain
// max_gap <= Ord_v <= br - 1 <= i - 1 <= n - 1 (L-space hypothesis assumed).
struct Certificate {
  std::string braid;
  int n = 0;
  int writhe = 0;
  AlexanderPoly alexander;
  std::vector<int> exponents;
  int max_gap = 0;
  bool twist_positive = false;
  bool lspace_assumed = false;
  bool concluded = false;      // br = i = n established
  bool inconsistent = false;   // max_gap > n - 1: impossible under the chain
  std::vector<ConclusionLine> conclusions;

  nlohmann::json to_json() const;
};

Certificate bridge_braid_certificate(const BraidWord& b, bool lspace_assumed);

// Certificate for the 4-braid family (sigma_2 sigma_1 sigma_3 sigma_2)^{2n+1}
// sigma_1^{-1} sigma_2 sigma_1 sigma_1 sigma_2.
Certificate baker_kegel_certificate(int n);

}  // namespace braidinv

#include "braidinv/burau.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidinv {

namespace {

// Right-multiply M by the generator matrix of sigma_{i} (1-based) or its
// inverse. Only columns i-2, i-1, i (0-based) change, so this is a column
// update instead of a full product.
void apply_generator(PolyMatrix& m, int i, bool inverse) {
  int d = m.dim();
  int c = i - 1;  // 0-based column of the modified row
  static const LaurentPoly t = LaurentPoly::var();
  static const LaurentPoly minus_t = -LaurentPoly::var();
  static const LaurentPoly t_inv = LaurentPoly::term(1, -1);
  static const LaurentPoly minus_t_inv = LaurentPoly::term(-1, -1);
  for (int r = 0; r < d; ++r) {
    LaurentPoly old = m.at(r, c);
    if (old.is_zero()) continue;
    if (!inverse) {
      if (c - 1 >= 0) m.at(r, c - 1) += t * old;
      if (c + 1 < d) m.at(r, c + 1) += old;
      m.at(r, c) = minus_t * old;
    } else {
      if (c - 1 >= 0) m.at(r, c - 1) += old;
      if (c + 1 < d) m.at(r, c + 1) += t_inv * old;
      m.at(r, c) = minus_t_inv * old;
    }
  }
}

}  // namespace

PolyMatrix reduced_burau(const BraidWord& b) {
  PolyMatrix m = PolyMatrix::identity(b.strands - 1);
  for (int letter : b.letters) apply_generator(m, std::abs(letter), letter < 0);
  return m;
}

AlexanderPoly AlexanderPoly::normalize(const LaurentPoly& p) {
  AlexanderPoly out;
  if (p.is_zero()) throw std::domain_error("Alexander polynomial cannot be zero");
  LaurentPoly q = p.shifted(-p.min_degree());
  if (q.coeff(0) < 0) q = -q;
  out.poly = q;
  for (int e = 0; e <= q.max_degree(); ++e)
    if (q.coeff(e) != 0) out.exponents.push_back(e);
  return out;
}

AlexanderPoly alexander(const BraidWord& b) {
  int components = closure_components(b);
  if (components != 1)
    throw std::domain_error("closure is a link (" + std::to_string(components) +
                            " components), not a knot");
  PolyMatrix m = reduced_burau(b);
  LaurentPoly d = (PolyMatrix::identity(m.dim()) - m).det();
  return AlexanderPoly::normalize(exact_div(d, geometric_sum(b.strands)));
}

AlexanderPoly torus_alexander(int p, int q) {
  if (p < 2 || q < 2)
    throw std::invalid_argument("torus_alexander: p, q >= 2 required");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("torus_alexander: p, q must be coprime");
  LaurentPoly prod(1);
  for (int h = 2; h <= p; ++h) {
    if (p % h != 0) continue;
    for (int l = 2; l <= q; ++l)
      if (q % l == 0) prod *= cyclotomic(l * h);
  }
  return AlexanderPoly::normalize(prod);
}

bool torus_alexander_squarefree(int p, int q) {
  std::vector<int> products;
  for (int h = 2; h <= p; ++h) {
    if (p % h != 0) continue;
    for (int l = 2; l <= q; ++l)
      if (q % l == 0) products.push_back(l * h);
  }
  std::sort(products.begin(), products.end());
  return std::adjacent_find(products.begin(), products.end()) == products.end();
}

bool trace_at_zero_is_zero(const BraidWord& b) {
  if (!b.positive())
    throw std::domain_error("trace_at_zero_is_zero: positive word required");
  if (closure_components(b) != 1)
    throw std::domain_error("trace_at_zero_is_zero: closure must be a knot");
  return reduced_burau(b).trace().eval_at_zero() == 0;
}

ExponentGaps exponent_gaps(const AlexanderPoly& a) {
  ExponentGaps out;
  for (size_t i = 0; i + 1 < a.exponents.size(); ++i)
    out.gaps.push_back(a.exponents[i + 1] - a.exponents[i]);
  out.max_gap = out.gaps.empty() ? 0 : *std::max_element(out.gaps.begin(), out.gaps.end());
  return out;
}

bool lspace_admissible(const AlexanderPoly& a) {
  if (a.exponents.empty()) return false;
  if (a.exponents.front() != 0) return false;
  BigInt expected = 1;
  for (int e : a.exponents) {
    if (a.poly.coeff(e) != expected) return false;
    expected = -expected;
  }
  // Alternation plus the +1 start forces +1 at the top iff the count is odd.
  return a.poly.coeff(a.exponents.back()) == 1;
}

namespace {

nlohmann::json conclusions_json(const std::vector<ConclusionLine>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cs)
    arr.push_back({{"claim", c.claim}, {"status", c.status}, {"ref", c.ref}});
  return arr;
}

}  // namespace

nlohmann::json FormReport::to_json() const {
  return {
      {"braid", braid},
      {"n", n},
      {"writhe", writhe},
      {"alexander", alexander.to_string()},
      {"exponents", exponents},
      {"max_gap", max_gap},
      {"conclusions", conclusions_json(conclusions)},
      {"pass", pass},
  };
}

FormReport check_twist_positive_form(const BraidWord& b) {
  if (!is_twist_positive(b))
    throw std::domain_error("check_twist_positive_form: word is not twist positive");
  FormReport r;
  r.braid = format_braid(b);
  r.n = b.strands;
  r.writhe = writhe(b);
  r.alexander = alexander(b);
  r.exponents = r.alexander.exponents;
  r.max_gap = exponent_gaps(r.alexander).max_gap;
  const LaurentPoly& p = r.alexander.poly;
  r.constant_is_one = p.coeff(0) == 1;
  r.linear_is_minus_one = p.coeff(1) == -1;
  r.middle_coeffs_vanish = true;
  for (int e = 2; e <= r.n - 1; ++e)
    if (p.coeff(e) != 0) r.middle_coeffs_vanish = false;
  r.tn_is_one = p.coeff(r.n) == 1;
  r.pass = r.constant_is_one && r.linear_is_minus_one && r.middle_coeffs_vanish &&
           r.tn_is_one;
  r.conclusions.push_back(
      {"Delta = 1 - t + t^n + t^{n+1} R(t) with n = " + std::to_string(r.n),
       r.pass ? "pass" : "fail", "twist-positive Alexander head form"});
  return r;
}

nlohmann::json Certificate::to_json() const {
  return {
      {"braid", braid},
      {"n", n},
      {"writhe", writhe},
      {"alexander", alexander.to_string()},
      {"exponents", exponents},
      {"max_gap", max_gap},
      {"twist_positive", twist_positive},
      {"lspace_assumed", lspace_assumed},
      {"concluded", concluded},
      {"inconsistent", inconsistent},
      {"conclusions", conclusions_json(conclusions)},
  };
}

namespace {

Certificate certificate_from(const BraidWord& b, bool lspace_assumed,
                             bool twist_positive) {
  Certificate c;
  c.braid = format_braid(b);
  c.n = b.strands;
  c.writhe = writhe(b);
  c.alexander = alexander(b);
  c.exponents = c.alexander.exponents;
  c.max_gap = exponent_gaps(c.alexander).max_gap;
  c.twist_positive = twist_positive;
  c.lspace_assumed = lspace_assumed;
  c.inconsistent = c.max_gap > c.n - 1;
  c.concluded = !c.inconsistent && c.max_gap >= c.n - 1;
  if (c.inconsistent) {
    c.conclusions.push_back(
        {"max exponent gap " + std::to_string(c.max_gap) + " exceeds n-1 = " +
             std::to_string(c.n - 1),
         "fail", "torsion-order bound (Juhasz-Miller-Zemke)"});
  } else if (c.concluded) {
    c.conclusions.push_back(
        {"br(K) = i(K) = " + std::to_string(c.n), "pass",
         "gap n-1 <= Ord_v <= br-1 <= i-1 <= n-1 forces equality"});
  } else {
    c.conclusions.push_back(
        {"max gap " + std::to_string(c.max_gap) + " < n-1; no conclusion at " +
             std::to_string(c.n) + " strands",
         "inconclusive", "torsion-order bound (Juhasz-Miller-Zemke)"});
  }
  return c;
}

}  // namespace

Certificate bridge_braid_certificate(const BraidWord& b, bool lspace_assumed) {
  if (!b.positive())
    throw std::domain_error("bridge_braid_certificate: positive word required");
  if (closure_components(b) != 1)
    throw std::domain_error("bridge_braid_certificate: closure must be a knot");
  if (!lspace_assumed)
    throw std::domain_error(
        "bridge_braid_certificate: the gap formula for Ord_v needs the "
        "L-space hypothesis");
  return certificate_from(b, true, is_twist_positive(b));
}

Certificate baker_kegel_certificate(int n) {
  BraidWord b = make_baker_kegel_braid(n);
  Certificate c = certificate_from(b, /*lspace_assumed=*/true,
                                   /*twist_positive=*/false);
  bool head = c.exponents.size() >= 4 && c.exponents[0] == 0 &&
              c.exponents[1] == 1 && c.exponents[2] == 4 && c.exponents[3] == 5;
  c.conclusions.push_back({"exponents begin 0, 1, 4, 5",
                           head ? "pass" : "fail",
                           "published head 1 - t + t^4 + t^5"});
  c.conclusions.push_back({"coefficients fit the L-space shape",
                           lspace_admissible(c.alexander) ? "pass" : "fail",
                           "Ozsvath-Szabo coefficient constraint"});
  int genus = c.alexander.degree() / 2;
  c.conclusions.push_back(
      {"genus from Delta degree: " + std::to_string(genus),
       c.alexander.degree() % 2 == 0 ? "pass" : "fail",
       "deg Delta = 2g for fibered knots"});
  return c;
}

}  // namespace braidinv

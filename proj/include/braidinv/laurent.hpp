#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace braidinv {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable t, stored dense from the lowest
// exponent. The first and last stored coefficients are nonzero unless the
// polynomial is zero (empty coefficient list). All arithmetic is exact.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit by design
  LaurentPoly(BigInt constant);     // NOLINT

  static LaurentPoly term(BigInt coeff, int exp);
  static LaurentPoly var();  // t

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const;  // pre: nonzero
  int max_degree() const;  // pre: nonzero
  BigInt coeff(int exp) const;

  // Value at t = 0; defined only when no negative exponent carries a
  // nonzero coefficient.
  BigInt eval_at_zero() const;

  BigInt eval_at_one() const;

  // Multiply by t^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const = default;

  // Ascending powers with explicit signs, e.g. "1 - t + t^3 - t^5 + t^6".
  std::string to_string() const;

  int lowest() const { return low_; }
  const std::vector<BigInt>& raw_coeffs() const { return coeffs_; }
  static LaurentPoly from_coeffs(int low, std::vector<BigInt> coeffs);

 private:
  int low_ = 0;
  std::vector<BigInt> coeffs_;

  void trim();
};

// Exact quotient in Z[t^{+-1}]; throws std::domain_error when the division
// leaves a remainder (every in-scope division is exact, so that signals an
// upstream bug).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// n-th cyclotomic polynomial, phi_n = (t^n - 1) / prod_{d|n, d<n} phi_d.
// Memoized behind a mutex; safe to call concurrently.
LaurentPoly cyclotomic(int n);

// 1 + t + ... + t^{n-1}
LaurentPoly geometric_sum(int n);

}  // namespace braidinv

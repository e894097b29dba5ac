#include "braidinv/laurent.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace braidinv {

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::term(BigInt coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exp;
    p.coeffs_.push_back(std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::var() { return term(1, 1); }

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<BigInt> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  size_t last = coeffs_.size();
  while (last > lead && coeffs_[last - 1] == 0) --last;
  coeffs_ = std::vector<BigInt>(coeffs_.begin() + lead, coeffs_.begin() + last);
  low_ += static_cast<int>(lead);
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::domain_error("min_degree of zero polynomial");
  return low_;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::domain_error("max_degree of zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < low_ || exp > max_degree()) return 0;
  return coeffs_[exp - low_];
}

BigInt LaurentPoly::eval_at_zero() const {
  if (!is_zero() && low_ < 0)
    throw std::domain_error("eval_at_zero: negative exponents present");
  return coeff(0);
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int low = std::min(low_, o.low_);
  int high = std::max(max_degree(), o.max_degree());
  std::vector<BigInt> out(static_cast<size_t>(high - low + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[low_ - low + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    out[o.low_ - low + i] += o.coeffs_[i];
  return from_coeffs(low, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coeffs(low_ + o.low_, std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    int exp = low_ + static_cast<int>(i);
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (exp == 0) {
      out << a;
    } else {
      if (a != 1) out << a;
      out << "t";
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (a.is_zero()) return {};
  const std::vector<BigInt>& d = b.raw_coeffs();
  std::vector<BigInt> r = a.raw_coeffs();
  if (r.size() < d.size())
    throw std::domain_error("exact_div: inexact division (degree too small)");
  std::vector<BigInt> q(r.size() - d.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    BigInt& lead = r[i + d.size() - 1];
    if (lead == 0) continue;
    if (lead % d.back() != 0)
      throw std::domain_error("exact_div: inexact division (coefficient)");
    q[i] = lead / d.back();
    for (size_t j = 0; j < d.size(); ++j) r[i + j] -= q[i] * d[j];
  }
  for (const auto& c : r)
    if (c != 0)
      throw std::domain_error("exact_div: inexact division (remainder)");
  return LaurentPoly::from_coeffs(a.lowest() - b.lowest(), std::move(q));
}

LaurentPoly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::map<int, LaurentPoly> memo;
  static std::mutex lock;
  std::scoped_lock guard(lock);
  auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  // Fill every divisor in ascending order so each step only needs smaller ones.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || memo.count(d)) continue;
    LaurentPoly num = LaurentPoly::term(1, d) - LaurentPoly(1);
    LaurentPoly den(1);
    for (int e = 1; e < d; ++e)
      if (d % e == 0) den *= memo.at(e);
    memo.emplace(d, exact_div(num, den));
  }
  return memo.at(n);
}

LaurentPoly geometric_sum(int n) {
  if (n < 1) throw std::invalid_argument("geometric_sum: n must be positive");
  return LaurentPoly::from_coeffs(0, std::vector<BigInt>(n, 1));
}

}  // namespace braidinv

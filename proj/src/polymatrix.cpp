#include "braidinv/polymatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace braidinv {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("PolyMatrix: dimension must be >= 1");
  e_.resize(static_cast<size_t>(dim) * dim);
}

PolyMatrix PolyMatrix::identity(int dim) { return scalar(dim, LaurentPoly(1)); }

PolyMatrix PolyMatrix::scalar(int dim, const LaurentPoly& value) {
  PolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = value;
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

LaurentPoly PolyMatrix::trace() const {
  LaurentPoly s;
  for (int i = 0; i < dim_; ++i) s += at(i, i);
  return s;
}

LaurentPoly PolyMatrix::det() const {
  return dim_ <= 4 ? detail::det_cofactor(*this) : detail::det_bareiss(*this);
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < dim_; ++i) {
    out << "[ ";
    for (int j = 0; j < dim_; ++j) {
      if (j) out << " , ";
      out << at(i, j).to_string();
    }
    out << " ]";
    if (i + 1 < dim_) out << "\n";
  }
  return out.str();
}

namespace detail {

namespace {
LaurentPoly det_cofactor_masked(const PolyMatrix& m, int row, unsigned cols) {
  if (row == m.dim()) return LaurentPoly(1);
  LaurentPoly acc;
  int sign = 1;
  for (int j = 0; j < m.dim(); ++j) {
    if (!(cols & (1u << j))) continue;
    if (!m.at(row, j).is_zero()) {
      LaurentPoly sub = det_cofactor_masked(m, row + 1, cols & ~(1u << j));
      LaurentPoly term = m.at(row, j) * sub;
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}
}  // namespace

LaurentPoly det_cofactor(const PolyMatrix& m) {
  return det_cofactor_masked(m, 0, (1u << m.dim()) - 1);
}

LaurentPoly det_bareiss(const PolyMatrix& m) {
  int d = m.dim();
  PolyMatrix a = m;
  LaurentPoly prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (a.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < d; ++i)
        if (!a.at(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return {};
      for (int j = 0; j < d; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j) {
        LaurentPoly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = exact_div(num, prev);
      }
    prev = a.at(k, k);
  }
  LaurentPoly out = a.at(d - 1, d - 1);
  return sign > 0 ? out : -out;
}

namespace {

// Polynomial in x with LaurentPoly coefficients, ascending; used only to
// expand the characteristic determinant.
using XPoly = std::vector<LaurentPoly>;

XPoly xp_add(const XPoly& a, const XPoly& b) {
  XPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

XPoly xp_neg(XPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

XPoly xdet(const std::vector<XPoly>& m, int dim, int row, unsigned cols) {
  if (row == dim) return {LaurentPoly(1)};
  XPoly acc;
  int sign = 1;
  for (int j = 0; j < dim; ++j) {
    if (!(cols & (1u << j))) continue;
    const XPoly& entry = m[static_cast<size_t>(row) * dim + j];
    if (!entry.empty()) {
      XPoly term = xp_mul(entry, xdet(m, dim, row + 1, cols & ~(1u << j)));
      acc = xp_add(acc, sign > 0 ? term : xp_neg(term));
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

}  // namespace detail

std::vector<LaurentPoly> char_poly(const PolyMatrix& m) {
  int d = m.dim();
  std::vector<detail::XPoly> entries(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      detail::XPoly e;
      e.push_back(i == j ? LaurentPoly(1) : LaurentPoly());
      e.push_back(-m.at(i, j));
      entries[static_cast<size_t>(i) * d + j] = std::move(e);
    }
  detail::XPoly q = detail::xdet(entries, d, 0, (1u << d) - 1);
  q.resize(static_cast<size_t>(d) + 1);
  return q;
}

std::vector<LaurentPoly> char_poly_reversed(const PolyMatrix& m) {
  std::vector<LaurentPoly> q = char_poly(m);
  return {q.rbegin(), q.rend()};
}

}  // namespace braidinv

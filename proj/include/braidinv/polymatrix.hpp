#pragma once

#include <vector>

#include "braidinv/laurent.hpp"

namespace braidinv {

// Square matrix over LaurentPoly; dimension fixed at construction.
class PolyMatrix {
 public:
  explicit PolyMatrix(int dim);
  static PolyMatrix identity(int dim);
  static PolyMatrix scalar(int dim, const LaurentPoly& value);

  int dim() const { return dim_; }
  LaurentPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const LaurentPoly& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * dim_ + j];
  }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const = default;

  LaurentPoly trace() const;
  // Cofactor expansion for dim <= 4, fraction-free elimination above.
  LaurentPoly det() const;

  std::string to_string() const;

 private:
  int dim_;
  std::vector<LaurentPoly> e_;
};

namespace detail {
LaurentPoly det_cofactor(const PolyMatrix& m);
LaurentPoly det_bareiss(const PolyMatrix& m);
}  // namespace detail

// Coefficients 1, a_1(t), ..., a_d(t) of det(I - x M), ascending in x.
std::vector<LaurentPoly> char_poly(const PolyMatrix& m);

// det(xI - M) via the coefficient-reversal identity
// det(I - xM) = x^d det((1/x)I - M).
std::vector<LaurentPoly> char_poly_reversed(const PolyMatrix& m);

}  // namespace braidinv

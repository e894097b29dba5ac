#include "braidinv/goeritz.hpp"

#include <sstream>
#include <stdexcept>

namespace braidinv {

SymmetricMatrix::SymmetricMatrix(int dim) : dim_(dim) {
  if (dim < 1)
    throw std::invalid_argument("SymmetricMatrix: dimension must be >= 1");
  e_.resize(static_cast<size_t>(dim) * dim);
}

void SymmetricMatrix::set(int i, int j, Rational v) {
  e_[static_cast<size_t>(i) * dim_ + j] = v;
  e_[static_cast<size_t>(j) * dim_ + i] = std::move(v);
}

std::string SymmetricMatrix::dump() const {
  std::ostringstream out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (j) out << " ";
      out << at(i, j);
    }
    if (i + 1 < dim_) out << "\n";
  }
  return out.str();
}

Inertia inertia(const SymmetricMatrix& m) {
  int d = m.dim();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = m.at(i, j);

  Inertia out;
  for (int i = 0; i < d; ++i) {
    if (a[i][i] == 0) {
      int j = -1;
      for (int jj = i + 1; jj < d; ++jj)
        if (a[i][jj] != 0) {
          j = jj;
          break;
        }
      if (j < 0) {
        ++out.n_zero;
        continue;
      }
      // Adding (or subtracting) row and column j keeps the form congruent
      // and makes the pivot nonzero; one of the two signs always works.
      Rational after_add = a[i][i] + 2 * a[i][j] + a[j][j];
      int s = after_add != 0 ? 1 : -1;
      for (int k = 0; k < d; ++k) a[i][k] += s * a[j][k];
      for (int k = 0; k < d; ++k) a[k][i] += s * a[k][j];
    }
    for (int j = i + 1; j < d; ++j) {
      if (a[j][i] == 0) continue;
      Rational f = a[j][i] / a[i][i];
      for (int k = 0; k < d; ++k) a[j][k] -= f * a[i][k];
      for (int k = 0; k < d; ++k) a[k][j] -= f * a[k][i];
    }
    ++(a[i][i] > 0 ? out.n_pos : out.n_neg);
  }
  return out;
}

GoeritzPair goeritz_family_matrix(int k, int m) {
  if (k < 1) throw std::invalid_argument("goeritz_family_matrix: k >= 1 required");
  if (m < 0) throw std::invalid_argument("goeritz_family_matrix: m >= 0 required");
  int q = 3 * k + 1;
  SymmetricMatrix full(q + 1);
  full.set(0, 0, 2 * m + q);
  for (int i = 1; i < q; ++i) full.set(0, i, -1);
  full.set(0, q, -(2 * m + 1));
  for (int i = 1; i <= q; ++i)
    for (int j = i; j <= q; ++j) {
      if (i == j) {
        full.set(i, i, i == q ? 2 * m - 1 : -1);
      } else if (j - i == 1 || (i == 1 && j == q)) {
        full.set(i, j, 1);
      }
    }
  SymmetricMatrix g(q);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) g.set(i - 1, j - 1, full.at(i, j));
  return GoeritzPair{std::move(full), std::move(g), q + 2 * m};
}

namespace {

SymmetricMatrix make_pn(int l, long long eps, int corner) {
  if (l < 1) throw std::invalid_argument("make_P/make_N: l >= 1 required");
  int q = 3 * l + 1;
  SymmetricMatrix m(q);
  for (int i = 0; i < q; ++i) m.set(i, i, i == q - 1 ? Rational(eps) : Rational(-1));
  for (int i = 0; i + 1 < q; ++i) m.set(i, i + 1, 1);
  m.set(0, q - 1, corner);
  return m;
}

}  // namespace

SymmetricMatrix make_P(int l, long long eps) { return make_pn(l, eps, +1); }
SymmetricMatrix make_N(int l, long long eps) { return make_pn(l, eps, -1); }

Inertia PNReduction::implied_inertia() const {
  Inertia out;
  out.n_pos = blocks;
  out.n_neg = 2 * blocks;
  if (tail > 0)
    ++out.n_pos;
  else if (tail < 0)
    ++out.n_neg;
  else
    ++out.n_zero;
  return out;
}

PNReduction pn_reduce(int l, long long eps, PNKind kind) {
  if (l < 1) throw std::invalid_argument("pn_reduce: l >= 1 required");
  // Each step splits off one B block and flips the kind; the 1x1 tail is
  // eps - 2 for P and eps + 2 for N.
  PNKind at_one = kind;
  if ((l - 1) % 2 != 0) at_one = at_one == PNKind::P ? PNKind::N : PNKind::P;
  PNReduction out;
  out.blocks = l;
  out.tail = Rational(eps) + (at_one == PNKind::P ? -2 : 2);
  return out;
}

int signature_closed_form(int k, int m) {
  if (k < 1) throw std::invalid_argument("signature_closed_form: k >= 1 required");
  if (m < 0) throw std::invalid_argument("signature_closed_form: m >= 0 required");
  if (k % 2 == 1 && (m == 0 || m == 1)) return -4 * k - 2 * m - 2;
  return -4 * k - 2 * m;
}

int signature_gordon_litherland(int k, int m) {
  GoeritzPair g = goeritz_family_matrix(k, m);
  return inertia(g.goeritz).signature() - g.mu;
}

}  // namespace braidinv

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidinv/goeritz.hpp"
#include "inertia_oracle.hpp"

using namespace braidinv;
using braidinv::testing::inertia_oracle;

namespace {

SymmetricMatrix diagonal(const std::vector<long long>& entries) {
  SymmetricMatrix m(static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i)
    m.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
  return m;
}

SymmetricMatrix random_symmetric(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> entry(-5, 5);
  SymmetricMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) m.set(i, j, entry(rng));
  return m;
}

// S A S^T for a random integer unimodular S, applied as elementary row and
// column operations so the result stays symmetric.
SymmetricMatrix random_congruence(std::mt19937& rng, const SymmetricMatrix& m) {
  int d = m.dim();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = m.at(i, j);
  std::uniform_int_distribution<int> idx(0, d - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> op(0, 2);
  for (int round = 0; round < 3 * d; ++round) {
    int i = idx(rng), j = idx(rng);
    switch (op(rng)) {
      case 0: {
        if (i == j) break;
        int c = coeff(rng);
        for (int k = 0; k < d; ++k) a[i][k] += c * a[j][k];
        for (int k = 0; k < d; ++k) a[k][i] += c * a[k][j];
        break;
      }
      case 1:
        if (i != j) {
          std::swap(a[i], a[j]);
          for (int k = 0; k < d; ++k) std::swap(a[k][i], a[k][j]);
        }
        break;
      default:
        for (int k = 0; k < d; ++k) a[i][k] = -a[i][k];
        for (int k = 0; k < d; ++k) a[k][i] = -a[k][i];
        break;
    }
  }
  SymmetricMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) out.set(i, j, a[i][j]);
  return out;
}

}  // namespace

TEST_CASE("inertia on diagonal and degenerate inputs") {
  CHECK(inertia(diagonal({-1, -1, 1})) == Inertia{1, 2, 0});
  CHECK(inertia(SymmetricMatrix(3)) == Inertia{0, 0, 3});
  // Zero diagonal with off-diagonal coupling: a hyperbolic plane has
  // signature 0.
  SymmetricMatrix hyperbolic(2);
  hyperbolic.set(0, 1, 1);
  CHECK(inertia(hyperbolic) == Inertia{1, 1, 0});
  // Zero pivot whose add-fix also hits zero, forcing the subtract branch.
  SymmetricMatrix tricky(2);
  tricky.set(0, 1, 1);
  tricky.set(1, 1, -2);
  CHECK(inertia(tricky).signature() == 0);
  CHECK(inertia(tricky) == inertia_oracle(tricky));
}

TEST_CASE("inertia is a congruence invariant and matches the root oracle") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 40; ++round) {
    int d = 2 + round % 7;  // up to 8x8
    SymmetricMatrix m = random_symmetric(rng, d);
    Inertia base = inertia(m);
    CHECK(base == inertia(random_congruence(rng, m)));
    if (d <= 6) CHECK(base == inertia_oracle(m));
    CHECK(base.n_pos + base.n_neg + base.n_zero == d);
  }
}

TEST_CASE("goeritz family matrices reproduce the displayed instance") {
  GoeritzPair g = goeritz_family_matrix(2, 2);
  CHECK(g.mu == 11);
  CHECK(g.full.at(0, 0) == 11);
  CHECK(g.full.at(0, 7) == -5);
  CHECK(g.full.at(7, 7) == 3);
  CHECK(g.goeritz.at(0, 6) == 1);
  CHECK(g.goeritz.at(6, 6) == 3);
  CHECK(g.goeritz.at(0, 0) == -1);
  for (int i = 0; i < 8; ++i) {
    Rational row = 0;
    for (int j = 0; j < 8; ++j) row += g.full.at(i, j);
    CHECK(row == 0);
  }
  CHECK(inertia(g.goeritz).signature() == -1);
  CHECK(signature_gordon_litherland(2, 2) == -12);
  CHECK_THROWS_AS(goeritz_family_matrix(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(goeritz_family_matrix(1, -1), std::invalid_argument);
}

TEST_CASE("matrix dump format") {
  SymmetricMatrix m(2);
  m.set(0, 0, Rational(1, 2));
  m.set(0, 1, -3);
  CHECK(m.dump() == "1/2 -3\n-3 0");
  GoeritzPair g = goeritz_family_matrix(1, 0);
  CHECK(g.goeritz.dump() ==
        "-1 1 0 1\n1 -1 1 0\n0 1 -1 1\n1 0 1 -1");
}

TEST_CASE("P and N matrices match their displayed 4x4 instances") {
  for (long long eps : {-3LL, 0LL, 5LL}) {
    SymmetricMatrix p = make_P(1, eps);
    SymmetricMatrix n = make_N(1, eps);
    const long long p_rows[4][4] = {{-1, 1, 0, 1},
                                    {1, -1, 1, 0},
                                    {0, 1, -1, 1},
                                    {1, 0, 1, eps}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(p.at(i, j) == p_rows[i][j]);
        long long expected = p_rows[i][j];
        if ((i == 0 && j == 3) || (i == 3 && j == 0)) expected = -1;
        CHECK(n.at(i, j) == expected);
      }
  }
}

TEST_CASE("goeritz matrix of the family is P_{k, 2m-1}") {
  for (int k = 1; k <= 8; ++k)
    for (int m = 0; m <= 8; ++m)
      CHECK(make_P(k, 2 * m - 1) == goeritz_family_matrix(k, m).goeritz);
}

TEST_CASE("pn reduction base cases and parity") {
  CHECK(pn_reduce(1, 7, PNKind::P).tail == 5);
  CHECK(pn_reduce(1, 7, PNKind::N).tail == 9);
  CHECK(pn_reduce(2, 7, PNKind::P).tail == 9);
  CHECK(pn_reduce(2, 7, PNKind::P).blocks == 2);
  CHECK(pn_reduce(3, 0, PNKind::P).tail == -2);
  CHECK(pn_reduce(3, 0, PNKind::N).tail == 2);
  CHECK_THROWS_AS(pn_reduce(0, 1, PNKind::P), std::invalid_argument);
}

TEST_CASE("pn reduction matches direct congruence inertia") {
  for (int l = 1; l <= 6; ++l)
    for (long long eps = -3; eps <= 5; ++eps) {
      CHECK(pn_reduce(l, eps, PNKind::P).implied_inertia() ==
            inertia(make_P(l, eps)));
      CHECK(pn_reduce(l, eps, PNKind::N).implied_inertia() ==
            inertia(make_N(l, eps)));
    }
}

TEST_CASE("closed-form signatures") {
  CHECK(signature_closed_form(1, 0) == -6);
  CHECK(signature_closed_form(1, 1) == -8);
  CHECK(signature_closed_form(2, 2) == -12);
  CHECK(signature_closed_form(3, 0) == -14);
  CHECK_THROWS_AS(signature_closed_form(0, 0), std::invalid_argument);
}

TEST_CASE("closed form equals the congruence route") {
  for (int k = 1; k <= 8; ++k)
    for (int m = 0; m <= 8; ++m)
      CHECK(signature_gordon_litherland(k, m) == signature_closed_form(k, m));
}

TEST_CASE("sign of the goeritz matrix follows the parity rule") {
  for (int k = 1; k <= 6; ++k)
    for (int m = 0; m <= 6; ++m) {
      int sign = inertia(goeritz_family_matrix(k, m).goeritz).signature();
      int expected = (k % 2 == 1 && m <= 1) ? -k - 1 : -k + 1;
      CHECK(sign == expected);
    }
}

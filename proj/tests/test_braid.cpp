#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidinv/braid.hpp"

using namespace braidinv;

TEST_CASE("parser handles plain tokens and signs") {
  BraidWord b = parse_braid("3: 2 1 2 1 2 1");
  CHECK(b.strands == 3);
  CHECK(b.letters == std::vector<int>{2, 1, 2, 1, 2, 1});

  BraidWord c = parse_braid("4: 2 1 3 2 -1");
  CHECK(c.strands == 4);
  CHECK(c.letters == std::vector<int>{2, 1, 3, 2, -1});
  CHECK_FALSE(c.positive());
  CHECK(b.positive());
}

TEST_CASE("parser rejects out-of-range and malformed input") {
  CHECK_THROWS_AS(parse_braid("3: 5 1"), parse_error);
  CHECK_THROWS_AS(parse_braid("3: 0"), parse_error);
  CHECK_THROWS_AS(parse_braid("3 2 1"), parse_error);
  CHECK_THROWS_AS(parse_braid("1: "), parse_error);
  CHECK_THROWS_AS(parse_braid("3: (2 1"), parse_error);
  CHECK_THROWS_AS(parse_braid("3: (2 1) 2"), parse_error);
  CHECK_THROWS_AS(parse_braid("3: )"), parse_error);
  try {
    parse_braid("3: 2 x");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("repetition sugar is accepted, never emitted") {
  BraidWord sugar = parse_braid("3: (2 1)\xc3\x97"  "7 (2)\xc3\x97" "4");
  CHECK(sugar == make_twisted_torus_braid(7, 2));
  CHECK(parse_braid("3: (2 1)x7 (2)x4") == sugar);
  CHECK(parse_braid("3: ((2 1)x2)x3 2 1") == parse_braid("3: (2 1)x7"));
  CHECK(format_braid(sugar) == "3: 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 2 2 2");
}

TEST_CASE("format round-trips") {
  for (const char* text : {"3: 2 1 2 1", "2:", "4: -1 2 -3 3"}) {
    BraidWord b = parse_braid(text);
    CHECK(parse_braid(format_braid(b)) == b);
  }
}

TEST_CASE("writhe is the exponent sum") {
  CHECK(writhe(make_twisted_torus_braid(7, 2)) == 18);
  CHECK(writhe(BraidWord(3, {})) == 0);
  CHECK(writhe(make_twisted_torus_braid(10, 0)) == 20);
  CHECK(writhe(make_twisted_torus_braid(7, 3)) == 20);
  CHECK(writhe(parse_braid("4: -1 -2 3")) == -1);
}

TEST_CASE("closure component counts") {
  CHECK(closure_components(parse_braid("2: 1")) == 1);
  // gamma_{2,1} = (s2)^2 (s1 s2 s2 s1) induces the identity permutation, so
  // its closure is a 3-component link (never a knot).
  CHECK(closure_components(parse_braid("3: 2 2 1 2 2 1")) == 3);
  for (int k = 4; k <= 12; ++k) {
    for (int m = 0; m <= 2; ++m) {
      int components = closure_components(make_twisted_torus_braid(k, m));
      if (k % 3 == 0)
        CHECK(components == 3);
      else
        CHECK(components == 1);
    }
  }
  CHECK(closure_components(BraidWord(4, {})) == 4);
}

TEST_CASE("conjugation by the half twist exchanges sigma_i and sigma_{n-i}") {
  BraidWord b = make_twisted_torus_braid(5, 2);
  BraidWord c = conjugate_by_garside(b);
  std::vector<int> expected{1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1};
  CHECK(c.letters == expected);
  CHECK(conjugate_by_garside(parse_braid("4: 2")) == parse_braid("4: 2"));
  CHECK(conjugate_by_garside(parse_braid("4: 1 3")) == parse_braid("4: 3 1"));
  CHECK(conjugate_by_garside(conjugate_by_garside(b)) == b);
  CHECK(conjugate_by_garside(parse_braid("3: -1 2")) == parse_braid("3: -2 1"));
}

TEST_CASE("cyclic rotation") {
  BraidWord b = parse_braid("4: 1 2 3");
  CHECK(cyclic_rotate(b, 1) == parse_braid("4: 2 3 1"));
  CHECK(cyclic_rotate(b, 0) == b);
  CHECK(cyclic_rotate(b, 3) == b);
  CHECK(cyclic_rotate(b, -1) == parse_braid("4: 3 1 2"));
  for (long long k = 0; k <= 3; ++k)
    CHECK(cyclic_rotate(cyclic_rotate(b, k), 3 - k) == b);
  CHECK(cyclic_rotate(BraidWord(3, {}), 5) == BraidWord(3, {}));
}

TEST_CASE("family constructors produce the literal words") {
  CHECK(make_torus_braid(2, 3) == parse_braid("2: 1 1 1"));
  CHECK(make_torus_braid(3, 2) == parse_braid("3: 1 2 1 2"));
  CHECK(make_tlink_braid({{2, 3}}) == parse_braid("2: 1 1 1"));
  CHECK(make_tlink_braid({{2, 2}, {4, 5}}) ==
        parse_braid("4: 1 1 (1 2 3)x5"));
  CHECK(make_one_bridge_braid(4, 2, 3) == parse_braid("4: 2 1 (3 2 1)x3"));
  CHECK(make_vafaee_braid(4, 2, 2, 1) == parse_braid("4: 3 2 1 3 2 1 3 2 3 2"));
  CHECK(make_baker_kegel_braid(1) ==
        parse_braid("4: (2 1 3 2)x3 -1 2 1 1 2"));
  CHECK(full_twist_word(3) == parse_braid("3: 1 2 1 2 1 2"));

  CHECK_THROWS_AS(make_torus_braid(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_twisted_torus_braid(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_twisted_torus_braid(5, -1), std::invalid_argument);
  CHECK_THROWS_AS(make_tlink_braid({{3, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_tlink_braid({{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_one_bridge_braid(4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_vafaee_braid(4, 1, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_baker_kegel_braid(0), std::invalid_argument);
}

TEST_CASE("standard form reindexes to k = 1 mod 3") {
  CHECK(standard_form(7, 5) == std::pair<int, int>{7, 5});
  CHECK(standard_form(5, 0) == std::pair<int, int>{4, 1});
  CHECK(standard_form(8, 1) == std::pair<int, int>{7, 2});
  CHECK_THROWS_AS(standard_form(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(standard_form(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(standard_form(7, -1), std::invalid_argument);
}

TEST_CASE("letters are validated at construction") {
  CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(concat(BraidWord(3, {1}), BraidWord(4, {1})),
                  std::invalid_argument);
}

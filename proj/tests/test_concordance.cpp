#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidinv/concordance.hpp"
#include "braidinv/goeritz.hpp"

using namespace braidinv;

TEST_CASE("genus and tau of positive braid knots") {
  CHECK(genus_tau(parse_braid("2: 1 1 1")) == std::pair<int, int>{1, 1});
  CHECK(genus_tau(make_twisted_torus_braid(10, 0)) == std::pair<int, int>{9, 9});
  CHECK(genus_tau(make_twisted_torus_braid(7, 3)) == std::pair<int, int>{9, 9});
  for (int q = 4; q <= 13; ++q) {
    if (q % 3 == 0) continue;
    CHECK(genus_tau(make_torus_braid(3, q)).first == (3 - 1) * (q - 1) / 2);
  }
  CHECK_THROWS_AS(genus_tau(parse_braid("3: -1 2")), std::domain_error);
  CHECK_THROWS_AS(genus_tau(parse_braid("2: 1 1")), std::domain_error);
}

TEST_CASE("same-tau families") {
  using P = TwistedTorusParams;
  CHECK(same_tau_family(7) == std::vector<P>{{2, 0}, {1, 3}});
  CHECK(same_tau_family(10) == std::vector<P>{{3, 0}, {2, 3}, {1, 6}});
  CHECK(same_tau_family(5) == std::vector<P>{{1, 1}});
  CHECK(same_tau_family(4) == std::vector<P>{{1, 0}});
  CHECK(same_tau_family(11) == std::vector<P>{{3, 1}, {2, 4}, {1, 7}});
  CHECK_THROWS_AS(same_tau_family(6), std::invalid_argument);
  CHECK_THROWS_AS(same_tau_family(3), std::invalid_argument);

  for (int q = 4; q <= 40; ++q) {
    if (q % 3 == 0) continue;
    std::vector<P> family = same_tau_family(q);
    CHECK(static_cast<int>(family.size()) == q / 3);
    int w = writhe(family.front().word());
    for (const auto& member : family) CHECK(writhe(member.word()) == w);
  }
}

TEST_CASE("member labels and words") {
  TwistedTorusParams p{3, 0};
  CHECK(p.label() == "T(3,10;0)");
  CHECK(p.word() == make_twisted_torus_braid(10, 0));
  CHECK(TwistedTorusParams{1, 6}.label() == "T(3,4;12)");
}

TEST_CASE("signature ledgers") {
  auto sigs = [](int q) {
    std::vector<int> out;
    for (const auto& e : signature_ledger(q)) out.push_back(e.signature);
    return out;
  };
  CHECK(sigs(10) == std::vector<int>{-14, -14, -16});
  CHECK(sigs(7) == std::vector<int>{-8, -10});
  CHECK(sigs(13) == std::vector<int>{-16, -18, -20, -22});
  CHECK(sigs(11) == std::vector<int>{-16, -16, -18});
  // At most one repeat, and only in the leading pair when floor(q/3) is odd.
  for (int q = 4; q <= 40; ++q) {
    if (q % 3 == 0) continue;
    std::vector<int> s = sigs(q);
    int repeats = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1]) {
        ++repeats;
        CHECK(i == 0);
      }
    CHECK(repeats <= 1);
    CHECK(repeats == ((q / 3) % 2 == 1 && q / 3 >= 2 ? 1 : 0));
  }
}

TEST_CASE("fox-milnor trace obstruction") {
  BraidWord base1 = make_twisted_torus_braid(10, 0);
  BraidWord other1 = make_twisted_torus_braid(7, 3);
  CHECK(fox_milnor_trace_obstruction(base1, other1) == Obstruction::obstructed);

  BraidWord base2 = make_twisted_torus_braid(10, 1);
  BraidWord other2 = make_twisted_torus_braid(7, 4);
  CHECK(fox_milnor_trace_obstruction(base2, other2) == Obstruction::obstructed);

  CHECK(fox_milnor_trace_obstruction(base1, base1) == Obstruction::inconclusive);
  // Non-torus base: the side condition fails, so no conclusion even though
  // the traces differ.
  CHECK(fox_milnor_trace_obstruction(other1, base1) == Obstruction::inconclusive);

  CHECK_THROWS_AS(fox_milnor_trace_obstruction(base1, make_twisted_torus_braid(7, 0)),
                  std::domain_error);
  CHECK_THROWS_AS(
      fox_milnor_trace_obstruction(parse_braid("2: 1 1 1"), parse_braid("2: 1 1 1")),
      std::domain_error);
  CHECK_THROWS_AS(
      fox_milnor_trace_obstruction(parse_braid("3: -1 1 2 2"), parse_braid("3: 1 2")),
      std::domain_error);
}

TEST_CASE("torus knot distinctness verdicts") {
  CHECK(torus_distinctness(3, 4, 3, 5) == TorusVerdict::genus);
  CHECK(torus_distinctness(3, 4, 3, 4) == TorusVerdict::same_knot);
  CHECK(torus_distinctness(2, 7, 3, 4) == TorusVerdict::braid_index);
  CHECK(torus_distinctness(4, 3, 3, 4) == TorusVerdict::same_knot);
  CHECK_THROWS_AS(torus_distinctness(2, 4, 3, 5), std::invalid_argument);
}

TEST_CASE("cable index bounds") {
  CableBounds c = cable_index_bounds(2, 3, 3, 3);
  CHECK(c.braid_lower == 6);
  CHECK(c.braid_exact == 6);
  CHECK(c.equal_if_base_equal);
  CableBounds d = cable_index_bounds(3, 5, 2, 3);
  CHECK(d.braid_lower == 6);
  CHECK(d.braid_exact == 9);
  CHECK_FALSE(d.equal_if_base_equal);
  CableBounds u = cable_index_bounds(2, 3, 1, 1);
  CHECK(u.braid_lower == 2);
  CHECK(u.braid_exact == 2);
  CHECK(u.equal_if_base_equal);
  CHECK_THROWS_AS(cable_index_bounds(1, 3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(cable_index_bounds(2, 3, 3, 2), std::invalid_argument);
}

TEST_CASE("hyperbolic form conjecture checks") {
  AlexanderPoly hyper = alexander(make_twisted_torus_braid(7, 2));
  CHECK(conjecture_form_check(hyper, 3, 8));
  // Delta of the (2,3)-cable of the trefoil equals Delta of T(3,4); the
  // pattern fails at the braid index slot whichever index the cable gets.
  AlexanderPoly cable = torus_alexander(3, 4);
  CHECK_FALSE(conjecture_form_check(cable, 2, 3));
  CHECK_FALSE(conjecture_form_check(cable, 4, 3));
  CHECK(conjecture_form_check(torus_alexander(2, 5), 2, 2));
  CHECK_FALSE(conjecture_form_check(hyper, 3, 7));
}

TEST_CASE("distinctness reports") {
  DistinctnessReport r10 = distinctness_report(10);
  CHECK(r10.members.size() == 3);
  CHECK(r10.pairwise_distinct);
  CHECK(r10.obstruction_used);
  CHECK(r10.genus_class == 9);
  REQUIRE(r10.pairs.size() == 3);
  for (const auto& p : r10.pairs) {
    if (p.a == 0 && p.b == 1)
      CHECK(p.method == "fox-milnor-trace");
    else
      CHECK(p.method == "signature");
  }
  for (const auto& m : r10.members) {
    CHECK(m.tau == m.genus);
    CHECK(m.genus == 9);
    CHECK(m.writhe == 20);
    CHECK(m.twist_positive);
    CHECK(m.lspace_assumed);
    CHECK(m.braid_index_bound == 3);
  }
  CHECK(r10.members[0].torus_knot);
  CHECK_FALSE(r10.members[1].torus_knot);

  DistinctnessReport r7 = distinctness_report(7);
  CHECK(r7.members.size() == 2);
  CHECK_FALSE(r7.obstruction_used);
  CHECK(r7.pairs.size() == 1);
  CHECK(r7.pairs[0].method == "signature");

  DistinctnessReport r4 = distinctness_report(4);
  CHECK(r4.members.size() == 1);
  CHECK(r4.pairs.empty());
  CHECK(r4.pairwise_distinct);

  CHECK_THROWS_AS(distinctness_report(6), std::invalid_argument);
}

TEST_CASE("report serialization") {
  DistinctnessReport r = distinctness_report(10);
  nlohmann::json j = r.to_json();
  CHECK(j["q"] == 10);
  CHECK(j["pairwise_distinct"] == true);
  CHECK(j["members"].size() == 3);
  CHECK(j["members"][0]["label"] == "T(3,10;0)");
  CHECK(j["members"][0]["signature"] == -14);
  CHECK(j["pairs"].size() == 3);

  std::string csv = r.to_csv();
  CHECK(csv.rfind("label,q,k,m,writhe,genus,tau,signature,verdict,obstruction_used\n",
                  0) == 0);
  CHECK(csv.find("T(3,10;0),10,3,0,20,9,9,-14,distinct,true") != std::string::npos);
  CHECK(csv.find("T(3,4;12),10,1,6,20,9,9,-16,distinct,false") != std::string::npos);
}

TEST_CASE("ledger signatures agree with the congruence route") {
  for (int q : {7, 10, 13, 17}) {
    for (const auto& e : signature_ledger(q))
      CHECK(e.signature == signature_gordon_litherland(e.member.k, e.member.m));
  }
}

#include "braidinv/concordance.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "braidinv/garside.hpp"
#include "braidinv/goeritz.hpp"

namespace braidinv {

std::string TwistedTorusParams::label() const {
  return "T(3," + std::to_string(q()) + ";" + std::to_string(2 * m) + ")";
}

BraidWord TwistedTorusParams::word() const {
  return make_twisted_torus_braid(q(), m);
}

std::pair<int, int> genus_tau(const BraidWord& b) {
  if (!b.positive())
    throw std::domain_error("genus_tau: positive braid word required");
  if (closure_components(b) != 1)
    throw std::domain_error("genus_tau: closure must be a knot");
  int w = writhe(b);
  if ((w - b.strands + 1) % 2 != 0)
    throw std::domain_error("genus_tau: writhe parity inconsistent with a knot");
  int g = (w - b.strands + 1) / 2;
  return {g, g};
}

std::vector<TwistedTorusParams> same_tau_family(int q) {
  if (q < 4 || q % 3 == 0)
    throw std::invalid_argument("same_tau_family: q >= 4 with q != 0 mod 3 required");
  int r = q / 3;
  int twist_offset = q % 3 == 1 ? 0 : 1;  // T(3, 3r+2) = T(3, 3r+1; 2)
  std::vector<TwistedTorusParams> out;
  out.reserve(static_cast<size_t>(r));
  for (int s = 0; s < r; ++s)
    out.push_back(TwistedTorusParams{r - s, 3 * s + twist_offset});
  return out;
}

std::vector<LedgerEntry> signature_ledger(int q) {
  std::vector<TwistedTorusParams> family = same_tau_family(q);
  std::vector<LedgerEntry> out;
  out.reserve(family.size());
  for (const auto& member : family)
    out.push_back({member, signature_closed_form(member.k, member.m)});
  int base_k = family.front().k;
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    int drop = out[i].signature - out[i + 1].signature;
    int expected = (base_k % 2 == 1 && i == 0) ? 0 : 2;
    if (drop != expected)
      throw std::runtime_error("signature ledger for q = " + std::to_string(q) +
                               " violates the descent pattern at step " +
                               std::to_string(i));
  }
  return out;
}

Obstruction fox_milnor_trace_obstruction(const BraidWord& base,
                                         const BraidWord& other) {
  if (!base.positive() || !other.positive())
    throw std::domain_error("fox_milnor_trace_obstruction: positive words required");
  if (base.strands != other.strands)
    throw std::domain_error("fox_milnor_trace_obstruction: strand counts differ");
  if (base.strands != 3)
    throw std::domain_error(
        "fox_milnor_trace_obstruction: the trace criterion is specific to "
        "3-braids");
  if (writhe(base) != writhe(other))
    throw std::domain_error(
        "fox_milnor_trace_obstruction: writhes differ, so the Burau "
        "determinants already differ");

  // Side condition: the base closure must be a torus knot T(3, writhe/2)
  // whose Alexander polynomial is a product of distinct cyclotomics.
  int w = writhe(base);
  if (w % 2 != 0 || w < 4) return Obstruction::inconclusive;
  int q_base = w / 2;
  if (std::gcd(3, q_base) != 1) return Obstruction::inconclusive;
  if (!torus_alexander_squarefree(3, q_base)) return Obstruction::inconclusive;
  if (!(alexander(base) == torus_alexander(3, q_base)))
    return Obstruction::inconclusive;

  LaurentPoly tr1 = reduced_burau(base).trace();
  LaurentPoly tr2 = reduced_burau(other).trace();
  return tr1 == tr2 ? Obstruction::inconclusive : Obstruction::obstructed;
}

TorusVerdict torus_distinctness(int p1, int q1, int p2, int q2) {
  auto normalize = [](int& p, int& q) {
    if (p > q) std::swap(p, q);
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
      throw std::invalid_argument("torus_distinctness: invalid torus parameters");
  };
  normalize(p1, q1);
  normalize(p2, q2);
  if (p1 == p2 && q1 == q2) return TorusVerdict::same_knot;
  if (p1 != p2) return TorusVerdict::braid_index;
  return TorusVerdict::genus;
}

CableBounds cable_index_bounds(int p, int q, int br_k, int i_k) {
  (void)q;  // the cable twisting does not enter the index bounds
  if (p < 2) throw std::invalid_argument("cable_index_bounds: p >= 2 required");
  if (br_k < 1 || br_k > i_k)
    throw std::invalid_argument("cable_index_bounds: need 1 <= br(K) <= i(K)");
  CableBounds out;
  out.braid_lower = static_cast<long long>(p) * br_k;
  out.braid_exact = static_cast<long long>(p) * i_k;
  out.equal_if_base_equal = br_k == i_k;
  return out;
}

bool conjecture_form_check(const AlexanderPoly& a, int n, int genus) {
  const LaurentPoly& p = a.poly;
  int top = 2 * genus;
  if (a.degree() != top) return false;
  if (p.coeff(0) != 1 || p.coeff(1) != -1 || p.coeff(n) != 1) return false;
  if (p.coeff(top) != 1 || p.coeff(top - 1) != -1 || p.coeff(top - n) != 1)
    return false;
  for (int e = 2; e < n; ++e)
    if (p.coeff(e) != 0) return false;
  for (int e = top - n + 1; e < top - 1; ++e)
    if (p.coeff(e) != 0) return false;
  return true;
}

namespace {

InvariantRecord member_record(const TwistedTorusParams& params) {
  InvariantRecord rec;
  rec.label = params.label();
  rec.params = params;
  rec.braid = params.word();
  rec.braid_index_bound = 3;
  rec.writhe = writhe(rec.braid);
  auto [g, tau] = genus_tau(rec.braid);
  rec.genus = g;
  rec.tau = tau;
  rec.signature = signature_closed_form(params.k, params.m);
  rec.alexander = alexander(rec.braid);
  rec.twist_positive = is_twist_positive(rec.braid);
  rec.lspace_assumed = true;  // braid-index-3 L-space family (Vafaee, Lee-Vafaee)
  rec.torus_knot = params.m <= 1;  // m = 1 is isotopic to T(3, 3k+2)
  return rec;
}

}  // namespace

nlohmann::json DistinctnessReport::to_json() const {
  nlohmann::json members_json = nlohmann::json::array();
  for (const auto& m : members) {
    members_json.push_back({
        {"label", m.label},
        {"k", m.params.k},
        {"m", m.params.m},
        {"braid", format_braid(m.braid)},
        {"braid_index_bound", m.braid_index_bound},
        {"writhe", m.writhe},
        {"genus", m.genus},
        {"tau", m.tau},
        {"signature", m.signature},
        {"alexander", m.alexander.to_string()},
        {"twist_positive", m.twist_positive},
        {"lspace_assumed", m.lspace_assumed},
        {"torus_knot", m.torus_knot},
    });
  }
  nlohmann::json pairs_json = nlohmann::json::array();
  for (const auto& p : pairs)
    pairs_json.push_back({{"a", members[p.a].label},
                          {"b", members[p.b].label},
                          {"method", p.method}});
  return {
      {"q", q},
      {"genus", genus_class},
      {"tau", tau},
      {"members", members_json},
      {"pairs", pairs_json},
      {"pairwise_distinct", pairwise_distinct},
      {"obstruction_used", obstruction_used},
  };
}

std::string DistinctnessReport::to_csv() const {
  std::ostringstream out;
  out << "label,q,k,m,writhe,genus,tau,signature,verdict,obstruction_used\n";
  for (size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    bool in_obstruction_pair = false;
    for (const auto& p : pairs)
      if (p.method == "fox-milnor-trace" &&
          (p.a == static_cast<int>(i) || p.b == static_cast<int>(i)))
        in_obstruction_pair = true;
    out << m.label << "," << q << "," << m.params.k << "," << m.params.m << ","
        << m.writhe << "," << m.genus << "," << m.tau << "," << m.signature
        << "," << (pairwise_distinct ? "distinct" : "undistinguished") << ","
        << (in_obstruction_pair ? "true" : "false") << "\n";
  }
  return out.str();
}

DistinctnessReport distinctness_report(int q) {
  DistinctnessReport report;
  report.q = q;
  std::vector<LedgerEntry> ledger = signature_ledger(q);
  for (const auto& entry : ledger)
    report.members.push_back(member_record(entry.member));
  report.genus_class = report.members.front().genus;
  report.tau = report.members.front().tau;

  bool all_distinguished = true;
  for (size_t i = 0; i < report.members.size(); ++i) {
    for (size_t j = i + 1; j < report.members.size(); ++j) {
      PairVerdict verdict{static_cast<int>(i), static_cast<int>(j), ""};
      if (report.members[i].signature != report.members[j].signature) {
        verdict.method = "signature";
      } else {
        Obstruction obs = fox_milnor_trace_obstruction(report.members[i].braid,
                                                       report.members[j].braid);
        if (obs == Obstruction::obstructed) {
          verdict.method = "fox-milnor-trace";
          report.obstruction_used = true;
        } else {
          all_distinguished = false;
          verdict.method = "undistinguished";
        }
      }
      report.pairs.push_back(verdict);
    }
  }
  report.pairwise_distinct = all_distinguished;
  if (!all_distinguished)
    throw std::runtime_error("distinctness_report: a pair with q = " +
                             std::to_string(q) +
                             " was left undistinguished; this would falsify "
                             "the pairwise-distinctness claim");
  return report;
}

}  // namespace braidinv

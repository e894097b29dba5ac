#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "braidinv/braid.hpp"
#include "braidinv/burau.hpp"
#include "braidinv/concordance.hpp"
#include "braidinv/garside.hpp"
#include "braidinv/goeritz.hpp"
#include "braidinv/verify.hpp"

namespace {

using namespace braidinv;

struct Options {
  std::string format = "text";
  VerifyConfig verify;
};

// BRAIDINV_CONFIG may point at a JSON file with default settings; command
// line flags override it.
void load_config_file(Options& opts) {
  const char* path = std::getenv("BRAIDINV_CONFIG");
  if (!path || !*path) return;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "warning: cannot read config file " << path << "\n";
    return;
  }
  nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    std::cerr << "warning: config file " << path << " is not valid JSON\n";
    return;
  }
  opts.format = j.value("format", opts.format);
  opts.verify.q_max = j.value("q_max", opts.verify.q_max);
  opts.verify.k_max = j.value("k_max", opts.verify.k_max);
  opts.verify.m_max = j.value("m_max", opts.verify.m_max);
  opts.verify.fail_fast = j.value("fail_fast", opts.verify.fail_fast);
}

int cmd_alex(const std::string& text, const Options& opts) {
  AlexanderPoly a = alexander(parse_braid(text));
  if (opts.format == "json") {
    nlohmann::json j{{"braid", text},
                     {"alexander", a.to_string()},
                     {"exponents", a.exponents},
                     {"max_gap", exponent_gaps(a).max_gap},
                     {"lspace_admissible", lspace_admissible(a)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << a.to_string() << "\n";
  }
  return 0;
}

int cmd_burau(const std::string& text, const Options& opts) {
  PolyMatrix m = reduced_burau(parse_braid(text));
  if (opts.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
      rows.push_back(row);
    }
    std::cout << nlohmann::json{{"braid", text}, {"matrix", rows}}.dump(2) << "\n";
  } else {
    std::cout << m.to_string() << "\n";
  }
  return 0;
}

int cmd_nf(const std::string& text, const Options& opts) {
  BraidWord b = parse_braid(text);
  NormalForm nf = garside_normal_form(b);
  bool twist_positive = is_twist_positive(b);
  std::string gamma;
  if (auto cert = twist_positive_certificate(b)) gamma = format_braid(*cert);
  if (opts.format == "json") {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : nf.factors)
      factors.push_back(format_braid(BraidWord(nf.strands, perm_braid_word(f))));
    nlohmann::json j{{"braid", text},
                     {"infimum", nf.infimum},
                     {"canonical_length", nf.canonical_length()},
                     {"factors", factors},
                     {"twist_positive", twist_positive}};
    if (!gamma.empty()) j["gamma"] = gamma;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "infimum=" << nf.infimum
              << " canonical_length=" << nf.canonical_length()
              << " twist_positive=" << (twist_positive ? "yes" : "no") << "\n";
    for (const auto& f : nf.factors)
      std::cout << "factor: " << format_braid(BraidWord(nf.strands, perm_braid_word(f)))
                << "\n";
    if (!gamma.empty()) std::cout << "gamma: " << gamma << "\n";
  }
  return 0;
}

int cmd_signature(int k, int m) {
  std::cout << "closed_form=" << signature_closed_form(k, m)
            << " gordon_litherland=" << signature_gordon_litherland(k, m) << "\n";
  return 0;
}

int cmd_goeritz(int k, int m, const Options& opts) {
  GoeritzPair g = goeritz_family_matrix(k, m);
  if (opts.format == "json") {
    nlohmann::json j{{"k", k},
                     {"m", m},
                     {"mu", g.mu},
                     {"full", g.full.dump()},
                     {"goeritz", g.goeritz.dump()},
                     {"signature", inertia(g.goeritz).signature()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "G'(K):\n" << g.full.dump() << "\n";
    std::cout << "G(K):\n" << g.goeritz.dump() << "\n";
    std::cout << "mu=" << g.mu << "\n";
  }
  return 0;
}

int cmd_family(int q, const Options& opts) {
  std::vector<LedgerEntry> ledger = signature_ledger(q);
  if (opts.format == "json") {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& e : ledger)
      members.push_back({{"label", e.member.label()},
                         {"k", e.member.k},
                         {"m", e.member.m},
                         {"writhe", writhe(e.member.word())},
                         {"signature", e.signature}});
    std::cout << nlohmann::json{{"q", q}, {"members", members}}.dump(2) << "\n";
    return 0;
  }
  auto [g, tau] = genus_tau(ledger.front().member.word());
  std::cout << "q=" << q << " genus=" << g << " tau=" << tau
            << " members=" << ledger.size() << "\n";
  for (const auto& e : ledger)
    std::cout << e.member.label() << " k=" << e.member.k << " m=" << e.member.m
              << " writhe=" << writhe(e.member.word())
              << " signature=" << e.signature << "\n";
  return 0;
}

int cmd_report(int q, const Options& opts) {
  DistinctnessReport report = distinctness_report(q);
  if (opts.format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << report.to_csv();
  } else {
    std::cout << "q=" << q << " genus=" << report.genus_class
              << " members=" << report.members.size() << "\n";
    for (const auto& m : report.members)
      std::cout << m.label << " writhe=" << m.writhe << " genus=" << m.genus
                << " tau=" << m.tau << " signature=" << m.signature << "\n";
    for (const auto& p : report.pairs)
      std::cout << "pair " << report.members[p.a].label << " vs "
                << report.members[p.b].label << ": " << p.method << "\n";
    std::cout << "verdict: "
              << (report.pairwise_distinct ? "pairwise distinct" : "UNRESOLVED")
              << " (" << report.members.size() << " members)\n";
  }
  return 0;
}

int cmd_verify(const Options& opts) {
  std::vector<CheckResult> results = run_verification(opts.verify);
  if (opts.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name},
                        {"ref", r.ref},
                        {"status", r.informational ? "note" : (r.pass ? "pass" : "fail")},
                        {"detail", r.detail}});
    int failures = count_failures(results);
    std::cout << nlohmann::json{{"checks", checks}, {"failures", failures}}.dump(2)
              << "\n";
    return failures == 0 ? 0 : 1;
  }
  for (const auto& r : results) {
    const char* status = r.informational ? "NOTE" : (r.pass ? "PASS" : "FAIL");
    std::cout << "[" << status << "] " << r.name << " -- " << r.ref << ": "
              << r.detail << "\n";
  }
  int failures = count_failures(results);
  std::cout << results.size() << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact braid-word invariants: Burau/Alexander, Garside normal "
               "form, Goeritz signatures, concordance reports"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  load_config_file(opts);
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--q-max", opts.verify.q_max, "Sweep bound for q")
      ->capture_default_str();
  app.add_option("--k-max", opts.verify.k_max, "Sweep bound for k")
      ->capture_default_str();
  app.add_option("--m-max", opts.verify.m_max, "Sweep bound for m")
      ->capture_default_str();
  app.add_flag("--fail-fast", opts.verify.fail_fast, "Stop at the first failed check");

  std::string braid_text;
  int k = 1, m = 0, q = 4;

  CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial of a braid closure");
  alex->add_option("braid", braid_text, "Braid word, e.g. \"3: 2 1 2 1\"")->required();

  CLI::App* burau = app.add_subcommand("burau", "Reduced Burau matrix of a braid word");
  burau->add_option("braid", braid_text)->required();

  CLI::App* nf = app.add_subcommand("nf", "Garside normal form and twist positivity");
  nf->add_option("braid", braid_text)->required();

  CLI::App* signature =
      app.add_subcommand("signature", "Signature of T(3,3k+1;2m), both routes");
  signature->add_option("k", k)->required();
  signature->add_option("m", m)->required();

  CLI::App* goeritz = app.add_subcommand("goeritz", "Goeritz matrices of T(3,3k+1;2m)");
  goeritz->add_option("k", k)->required();
  goeritz->add_option("m", m)->required();

  CLI::App* family =
      app.add_subcommand("family", "Same-tau twisted torus family and signature ledger");
  family->add_option("q", q)->required();

  CLI::App* report =
      app.add_subcommand("report", "Concordance distinctness report for the q family");
  report->add_option("q", q)->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (alex->parsed()) return cmd_alex(braid_text, opts);
    if (burau->parsed()) return cmd_burau(braid_text, opts);
    if (nf->parsed()) return cmd_nf(braid_text, opts);
    if (signature->parsed()) return cmd_signature(k, m);
    if (goeritz->parsed()) return cmd_goeritz(k, m, opts);
    if (family->parsed()) return cmd_family(q, opts);
    if (report->parsed()) return cmd_report(q, opts);
    if (verify->parsed()) return cmd_verify(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

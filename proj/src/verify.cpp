#include "braidinv/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "braidinv/braid.hpp"
#include "braidinv/burau.hpp"
#include "braidinv/concordance.hpp"
#include "braidinv/garside.hpp"
#include "braidinv/goeritz.hpp"
#include "braidinv/laurent.hpp"
#include "braidinv/polymatrix.hpp"

namespace braidinv {

namespace {

void expect(bool ok, const std::string& what, std::vector<std::string>& errors) {
  if (!ok) errors.push_back(what);
}

CheckResult run_check(const std::string& name, const std::string& ref,
                      const std::function<std::string(std::vector<std::string>&)>& body) {
  CheckResult r;
  r.name = name;
  r.ref = ref;
  std::vector<std::string> errors;
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body(errors);
  } catch (const std::exception& e) {
    errors.push_back(std::string("exception: ") + e.what());
  }
  auto stop = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  r.pass = errors.empty();
  if (r.pass) {
    r.detail = detail;
  } else {
    std::ostringstream out;
    for (size_t i = 0; i < errors.size() && i < 4; ++i) {
      if (i) out << "; ";
      out << errors[i];
    }
    if (errors.size() > 4) out << "; +" << errors.size() - 4 << " more";
    r.detail = out.str();
  }
  return r;
}

// --- check 1: golden reduced Burau matrices ---------------------------------

std::string check_burau_golden(std::vector<std::string>& errors) {
  for (int k = 1; k <= 6; ++k) {
    PolyMatrix expected(2);
    expected.at(0, 0) = LaurentPoly::term(-1, 3 * k + 1);
    expected.at(0, 1) = LaurentPoly::term(1, 3 * k);
    expected.at(1, 0) = LaurentPoly::term(-1, 3 * k + 2);
    PolyMatrix got = reduced_burau(make_twisted_torus_braid(3 * k + 1, 0));
    expect(got == expected, "(s2 s1)^{3k+1} Burau mismatch at k=" + std::to_string(k),
           errors);
  }
  for (int n = 2; n <= 5; ++n) {
    PolyMatrix got = reduced_burau(full_twist_word(n));
    PolyMatrix expected = PolyMatrix::scalar(n - 1, LaurentPoly::term(1, n));
    expect(got == expected, "full twist Burau != t^n I at n=" + std::to_string(n),
           errors);
  }
  return "6 torus powers + 4 full twists matched entrywise";
}

// --- check 2: Alexander head form across the twist positive families --------

std::string check_head_form(std::vector<std::string>& errors) {
  int def41 = 0, tlink = 0, bridge = 0, vafaee = 0;
  auto test_word = [&](const BraidWord& b, int& counter, const std::string& tag) {
    if (!b.positive() || closure_components(b) != 1) return;
    if (!is_twist_positive(b)) return;
    ++counter;
    FormReport r = check_twist_positive_form(b);
    expect(r.pass, tag + " fails the head form: " + format_braid(b), errors);
  };

  for (int k = 4; k <= 16; ++k) {
    if (k % 3 == 0) continue;
    for (int m = 0; m <= 4; ++m)
      test_word(make_twisted_torus_braid(k, m), def41, "T(3,k;2m)");
  }
  expect(def41 == 45, "expected 45 twisted torus words, saw " + std::to_string(def41),
         errors);

  for (int p = 2; p <= 5; ++p)
    for (int q = 1; q <= 12; ++q)
      test_word(make_tlink_braid({{p, q}}), tlink, "T-link");
  for (int p1 = 2; p1 <= 5; ++p1)
    for (int p2 = p1; p2 <= 5; ++p2)
      for (int q1 = 1; q1 <= 6; ++q1)
        for (int q2 = 1; q2 <= 6; ++q2) {
          test_word(make_tlink_braid({{p1, q1}, {p2, q2}}), tlink, "T-link");
          for (int p3 = p2; p3 <= 5; ++p3)
            for (int q3 = 1; q3 <= 6; ++q3)
              test_word(make_tlink_braid({{p1, q1}, {p2, q2}, {p3, q3}}), tlink,
                        "T-link");
        }

  for (int w = 3; w <= 5; ++w)
    for (int b = 1; b <= w - 2; ++b)
      for (int t = 1; t <= 2 * w + 2; ++t)
        test_word(make_one_bridge_braid(w, b, t), bridge, "one-bridge");

  for (int w = 3; w <= 5; ++w)
    for (int k = 2; k <= w - 1; ++k)
      for (int t = 1; t <= w + 2; ++t)
        for (int s = 1; s <= 2; ++s)
          test_word(make_vafaee_braid(w, t, k, s), vafaee, "vafaee");

  expect(tlink > 0 && bridge > 0 && vafaee > 0, "a sweep family came up empty",
         errors);
  std::ostringstream out;
  out << "twist positive knot words checked: " << def41 << " twisted torus, "
      << tlink << " T-link, " << bridge << " one-bridge, " << vafaee << " vafaee";
  return out.str();
}

// --- check 3: Burau trace vanishes at t = 0 ---------------------------------

std::string check_trace_zero(std::vector<std::string>& errors, int n_max) {
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> strand_dist(2, n_max);
  int tested = 0;
  while (tested < 500) {
    int n = strand_dist(rng);
    std::uniform_int_distribution<int> len_dist(1, 16);
    std::uniform_int_distribution<int> gen_dist(1, n - 1);
    int len = len_dist(rng);
    std::vector<int> letters(static_cast<size_t>(len));
    for (int& l : letters) l = gen_dist(rng);
    BraidWord b(n, std::move(letters));
    if (closure_components(b) != 1) continue;
    ++tested;
    if (!trace_at_zero_is_zero(b)) {
      expect(false, "nonzero trace at t=0 for " + format_braid(b), errors);
      return "";
    }
  }
  return "500 random positive knot words, all with tr B(0) = 0";
}

// --- check 4: golden Goeritz matrices for (k, m) = (2, 2) -------------------

std::string check_goeritz_golden(std::vector<std::string>& errors) {
  static const int full_expected[8][8] = {
      {11, -1, -1, -1, -1, -1, -1, -5}, {-1, -1, 1, 0, 0, 0, 0, 1},
      {-1, 1, -1, 1, 0, 0, 0, 0},       {-1, 0, 1, -1, 1, 0, 0, 0},
      {-1, 0, 0, 1, -1, 1, 0, 0},       {-1, 0, 0, 0, 1, -1, 1, 0},
      {-1, 0, 0, 0, 0, 1, -1, 1},       {-5, 1, 0, 0, 0, 0, 1, 3},
  };
  GoeritzPair g = goeritz_family_matrix(2, 2);
  expect(g.full.dim() == 8, "G' dimension", errors);
  expect(g.goeritz.dim() == 7, "G dimension", errors);
  expect(g.mu == 11, "mu(T(3,7;4)) = 11", errors);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      expect(g.full.at(i, j) == full_expected[i][j],
             "G' entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
             errors);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      expect(g.goeritz.at(i, j) == full_expected[i + 1][j + 1],
             "G entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
             errors);
  for (int i = 0; i < 8; ++i) {
    Rational row_sum = 0;
    for (int j = 0; j < 8; ++j) row_sum += g.full.at(i, j);
    expect(row_sum == 0, "G' row " + std::to_string(i) + " does not sum to 0",
           errors);
  }
  return "8x8 and 7x7 entries matched, mu = 11, all row sums 0";
}

// --- check 5: closed-form signature equals Gordon-Litherland ----------------

std::string check_signature(std::vector<std::string>& errors, int k_max, int m_max) {
  int checked = 0;
  for (int k = 1; k <= k_max; ++k)
    for (int m = 0; m <= m_max; ++m) {
      int closed = signature_closed_form(k, m);
      int gl = signature_gordon_litherland(k, m);
      expect(closed == gl,
             "signature mismatch at (k,m)=(" + std::to_string(k) + "," +
                 std::to_string(m) + "): closed " + std::to_string(closed) +
                 " vs congruence " + std::to_string(gl),
             errors);
      ++checked;
    }
  auto spot = [&](int torus_q, int expected) {
    auto [kp, m] = standard_form(torus_q, 0);
    int sig = signature_closed_form((kp - 1) / 3, m);
    expect(sig == expected,
           "sigma(T(3," + std::to_string(torus_q) + ")) = " + std::to_string(sig) +
               ", expected " + std::to_string(expected),
           errors);
  };
  spot(4, -6);
  spot(5, -8);
  spot(8, -10);
  return std::to_string(checked) + " (k,m) points agree; torus spot values hold";
}

// --- check 6: P/N recursion against direct congruence inertia ---------------

std::string check_pn_recursion(std::vector<std::string>& errors) {
  int checked = 0;
  for (int l = 1; l <= 6; ++l)
    for (long long eps = -3; eps <= 5; ++eps) {
      for (PNKind kind : {PNKind::P, PNKind::N}) {
        SymmetricMatrix m = kind == PNKind::P ? make_P(l, eps) : make_N(l, eps);
        Inertia direct = inertia(m);
        Inertia implied = pn_reduce(l, eps, kind).implied_inertia();
        expect(direct == implied,
               "P/N inertia mismatch at l=" + std::to_string(l) +
                   " eps=" + std::to_string(eps),
               errors);
        ++checked;
      }
    }
  return std::to_string(checked) + " (l, eps, kind) points agree";
}

// --- check 7: same-tau family count and writhe constancy --------------------

std::string check_family_count(std::vector<std::string>& errors, int q_max) {
  int families = 0;
  for (int q = 4; q <= q_max; ++q) {
    if (q % 3 == 0) continue;
    std::vector<TwistedTorusParams> family = same_tau_family(q);
    expect(static_cast<int>(family.size()) == q / 3,
           "family size for q=" + std::to_string(q), errors);
    int w0 = writhe(family.front().word());
    for (const auto& member : family)
      expect(writhe(member.word()) == w0,
             "writhe differs inside the q=" + std::to_string(q) + " family",
             errors);
    signature_ledger(q);  // throws if the descent pattern breaks
    ++families;
  }
  return std::to_string(families) + " families have size floor(q/3) and constant writhe";
}

// --- check 8: pairwise distinctness reports ----------------------------------

std::string check_distinctness(std::vector<std::string>& errors, int q_max) {
  int reports = 0, obstructions = 0;
  for (int q = 4; q <= q_max; ++q) {
    if (q % 3 == 0) continue;
    DistinctnessReport report = distinctness_report(q);
    expect(report.pairwise_distinct, "report q=" + std::to_string(q), errors);
    int r = q / 3;
    bool repeat_expected = r % 2 == 1 && r >= 2;
    expect(report.obstruction_used == repeat_expected,
           "fox-milnor usage at q=" + std::to_string(q) + " should be " +
               (repeat_expected ? "true" : "false"),
           errors);
    if (report.obstruction_used) ++obstructions;
    ++reports;
  }
  return std::to_string(reports) + " reports pairwise distinct, " +
         std::to_string(obstructions) + " needed the trace obstruction";
}

// --- check 9: isotopic presentations share the Burau char poly --------------

std::string check_conjugate_charpoly(std::vector<std::string>& errors) {
  int checked = 0;
  for (int q = 4; q <= 16; q += 3)
    for (int m = 1; m <= 4; ++m) {
      auto lhs = char_poly(reduced_burau(make_twisted_torus_braid(q, m)));
      auto rhs = char_poly(reduced_burau(make_twisted_torus_braid(q + 1, m - 1)));
      expect(lhs == rhs,
             "char poly differs for T(3," + std::to_string(q) + ";" +
                 std::to_string(2 * m) + ") vs T(3," + std::to_string(q + 1) +
                 ";" + std::to_string(2 * m - 2) + ")",
             errors);
      ++checked;
    }
  return std::to_string(checked) + " isotopic pairs share q_B(x)";
}

// --- check 10: the 4-braid family certificates ------------------------------

std::string check_baker_kegel(std::vector<std::string>& errors) {
  std::ostringstream degrees;
  for (int n = 1; n <= 3; ++n) {
    Certificate c = baker_kegel_certificate(n);
    bool head = c.exponents.size() >= 4 && c.exponents[0] == 0 &&
                c.exponents[1] == 1 && c.exponents[2] == 4 && c.exponents[3] == 5;
    expect(head, "exponent head at n=" + std::to_string(n), errors);
    expect(c.max_gap == 3, "max gap at n=" + std::to_string(n), errors);
    expect(lspace_admissible(c.alexander),
           "L-space shape at n=" + std::to_string(n), errors);
    expect(c.concluded && c.n == 4, "br = i = 4 at n=" + std::to_string(n), errors);
    // Computed degree is 8n+4 (= 2g, matching the penultimate term -t^{8n+3});
    // the published table prints 8n+2, inconsistent with its own tail.
    expect(c.alexander.degree() == 8 * n + 4,
           "degree at n=" + std::to_string(n) + " is " +
               std::to_string(c.alexander.degree()),
           errors);
    if (n > 1) degrees << ", ";
    degrees << c.alexander.degree();
  }
  return "n=1..3: head 0,1,4,5; gap 3; br = i = 4; degrees " + degrees.str() +
         " = 8n+4 (published 8n+2 contradicts its own -t^{8n+3} term)";
}

// --- check 11: word Alexander equals the cyclotomic-product value -----------

std::string check_torus_oracle(std::vector<std::string>& errors) {
  int pairs = 0;
  for (int p = 2; p <= 4; ++p)
    for (int q = p + 1; q <= 13; ++q) {
      if (std::gcd(p, q) != 1) continue;
      AlexanderPoly via_burau = alexander(make_torus_braid(p, q));
      AlexanderPoly via_cyclotomic = torus_alexander(p, q);
      expect(via_burau == via_cyclotomic,
             "T(" + std::to_string(p) + "," + std::to_string(q) + ") mismatch",
             errors);
      ++pairs;
    }
  for (int q = 4; q <= 13; ++q) {
    if (q % 3 == 0) continue;
    int gap = exponent_gaps(torus_alexander(3, q)).max_gap;
    expect(gap == 2, "max gap of Delta(T(3," + std::to_string(q) + ")) is " +
                         std::to_string(gap),
           errors);
  }
  return std::to_string(pairs) + " torus knots agree on both routes; 3-strand gaps all 2";
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  if (config.q_max < 4 || config.k_max < 1 || config.m_max < 0 || config.n_max < 2)
    throw std::invalid_argument("run_verification: sweep bounds out of range");
  std::vector<CheckResult> results;
  auto add = [&](CheckResult r) {
    results.push_back(std::move(r));
    return !config.fail_fast || results.back().pass;
  };

  if (!add(run_check("burau-golden", "full twist Burau is t^n I; 3-braid torus powers",
                     check_burau_golden)))
    return results;
  if (!add(run_check("alexander-head-form",
                     "twist positive closures have Delta = 1 - t + t^n + ...",
                     check_head_form)))
    return results;
  if (!add(run_check("trace-at-zero", "positive knot braids have tr B(0) = 0",
                     [&](std::vector<std::string>& e) {
                       return check_trace_zero(e, config.n_max);
                     })))
    return results;
  if (!add(run_check("goeritz-golden", "displayed G'(K), G(K) for T(3,7;4)",
                     check_goeritz_golden)))
    return results;
  if (!add(run_check("signature-closed-form",
                     "Gordon-Litherland congruence equals the closed form",
                     [&](std::vector<std::string>& e) {
                       return check_signature(e, config.k_max, config.m_max);
                     })))
    return results;
  if (!add(run_check("pn-recursion", "P/N block reduction matches congruence inertia",
                     check_pn_recursion)))
    return results;
  if (!add(run_check("same-tau-count", "family of floor(q/3) members shares writhe",
                     [&](std::vector<std::string>& e) {
                       return check_family_count(e, config.q_max);
                     })))
    return results;
  if (!add(run_check("concordance-distinctness",
                     "signature ledger plus Fox-Milnor trace obstruction",
                     [&](std::vector<std::string>& e) {
                       return check_distinctness(e, config.q_max);
                     })))
    return results;
  if (!add(run_check("conjugate-charpoly",
                     "isotopic twisted torus words share the Burau char poly",
                     check_conjugate_charpoly)))
    return results;
  if (!add(run_check("bk-family", "4-braid L-space family bridge certificate",
                     check_baker_kegel)))
    return results;
  if (!add(run_check("torus-oracle", "Burau Alexander equals the cyclotomic product",
                     check_torus_oracle)))
    return results;

  CheckResult excluded;
  excluded.name = "floer-inputs-excluded";
  excluded.ref = "torsion order, tau, N(K) enter as assumption flags only";
  excluded.pass = true;
  excluded.informational = true;
  excluded.detail =
      "no Heegaard Floer quantity is computed here; L-space status is a "
      "flagged hypothesis on the cited families";
  results.push_back(std::move(excluded));
  return results;
}

int count_failures(const std::vector<CheckResult>& results) {
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass && !r.informational) ++failures;
  return failures;
}

}  // namespace braidinv

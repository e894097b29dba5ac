#include "braidinv/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidinv {

namespace {
void check_letter(int strands, int letter) {
  int idx = std::abs(letter);
  if (letter == 0 || idx > strands - 1)
    throw std::invalid_argument("generator index " + std::to_string(idx) +
                                " out of range for " + std::to_string(strands) +
                                " strands");
}
}  // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 2) throw std::invalid_argument("a braid needs at least 2 strands");
  for (int l : letters) check_letter(n, l);
}

bool BraidWord::positive() const {
  for (int l : letters)
    if (l < 0) return false;
  return true;
}

namespace {

// Recursive-descent parser for the token stream after "<n>:".
struct Parser {
  const std::string& s;
  size_t pos = 0;
  int strands = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_times_sign() {
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == '*')) return true;
    // UTF-8 U+00D7
    return pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC3 &&
           static_cast<unsigned char>(s[pos + 1]) == 0x97;
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) throw parse_error("expected an integer", start);
    return std::stoll(s.substr(start, pos - start));
  }

  void parse_items(std::vector<int>& out) {
    while (true) {
      skip_ws();
      if (pos >= s.size() || s[pos] == ')') return;
      if (s[pos] == '(') {
        size_t open = pos++;
        std::vector<int> group;
        parse_items(group);
        skip_ws();
        if (pos >= s.size() || s[pos] != ')')
          throw parse_error("unclosed '('", open);
        ++pos;
        skip_ws();
        if (!at_times_sign())
          throw parse_error("expected repetition count after ')'", pos);
        pos += (s[pos] == 'x' || s[pos] == '*') ? 1 : 2;
        size_t cnt_pos = pos;
        long long reps = parse_int();
        if (reps < 0) throw parse_error("repetition count must be >= 0", cnt_pos);
        for (long long r = 0; r < reps; ++r)
          out.insert(out.end(), group.begin(), group.end());
      } else {
        size_t tok_pos = pos;
        long long v = parse_int();
        if (v == 0) throw parse_error("generator index 0 is not a letter", tok_pos);
        if (std::llabs(v) > strands - 1)
          throw parse_error("generator index " + std::to_string(std::llabs(v)) +
                                " out of range for " + std::to_string(strands) +
                                " strands",
                            tok_pos);
        out.push_back(static_cast<int>(v));
      }
    }
  }
};

}  // namespace

BraidWord parse_braid(const std::string& text) {
  Parser p(text);
  long long n = p.parse_int();
  if (n < 2) throw parse_error("strand count must be >= 2", 0);
  p.skip_ws();
  if (p.pos >= text.size() || text[p.pos] != ':')
    throw parse_error("expected ':' after strand count", p.pos);
  ++p.pos;
  p.strands = static_cast<int>(n);
  std::vector<int> letters;
  p.parse_items(letters);
  p.skip_ws();
  if (p.pos < text.size()) throw parse_error("unexpected ')'", p.pos);
  return BraidWord(p.strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream out;
  out << b.strands << ":";
  for (int l : b.letters) out << " " << l;
  return out.str();
}

int writhe(const BraidWord& b) {
  int s = 0;
  for (int l : b.letters) s += l > 0 ? 1 : -1;
  return s;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    for (int& v : perm) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return perm;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm = braid_permutation(b);
  std::vector<bool> seen(perm.size());
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord conjugate_by_garside(const BraidWord& b) {
  BraidWord out = b;
  for (int& l : out.letters) {
    int flipped = b.strands - std::abs(l);
    l = l > 0 ? flipped : -flipped;
  }
  return out;
}

BraidWord cyclic_rotate(const BraidWord& b, long long k) {
  if (b.letters.empty()) return b;
  long long len = static_cast<long long>(b.letters.size());
  long long shift = ((k % len) + len) % len;
  BraidWord out = b;
  for (size_t j = 0; j < b.letters.size(); ++j)
    out.letters[j] = b.letters[(j + shift) % len];
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("concat: strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord make_torus_braid(int p, int q) {
  if (p < 2) throw std::invalid_argument("torus braid: p >= 2 required");
  if (q < 1) throw std::invalid_argument("torus braid: q >= 1 required");
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(p - 1) * q);
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) letters.push_back(i);
  return BraidWord(p, std::move(letters));
}

BraidWord make_twisted_torus_braid(int k_param, int m) {
  if (k_param < 1)
    throw std::invalid_argument("twisted torus braid: k >= 1 required");
  if (m < 0) throw std::invalid_argument("twisted torus braid: m >= 0 required");
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(2 * k_param + 2 * m));
  for (int r = 0; r < k_param; ++r) {
    letters.push_back(2);
    letters.push_back(1);
  }
  letters.insert(letters.end(), static_cast<size_t>(2 * m), 2);
  return BraidWord(3, std::move(letters));
}

BraidWord make_tlink_braid(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("T-link: at least one (p, q) pair");
  int prev = 2;
  for (auto [p, q] : pairs) {
    if (p < prev)
      throw std::invalid_argument("T-link: 2 <= p_1 <= ... <= p_s required");
    if (q < 1) throw std::invalid_argument("T-link: q_i > 0 required");
    prev = p;
  }
  int strands = pairs.back().first;
  std::vector<int> letters;
  for (auto [p, q] : pairs)
    for (int r = 0; r < q; ++r)
      for (int i = 1; i < p; ++i) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

BraidWord make_one_bridge_braid(int w, int b, int t) {
  if (w < 3) throw std::invalid_argument("one-bridge braid: w >= 3 required");
  if (b < 1 || b > w - 2)
    throw std::invalid_argument("one-bridge braid: 1 <= b <= w-2 required");
  if (t < 1) throw std::invalid_argument("one-bridge braid: t >= 1 required");
  std::vector<int> letters;
  for (int i = b; i >= 1; --i) letters.push_back(i);
  for (int r = 0; r < t; ++r)
    for (int i = w - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(w, std::move(letters));
}

BraidWord make_vafaee_braid(int w, int t, int k, int s) {
  if (w < 3) throw std::invalid_argument("vafaee braid: w >= 3 required");
  if (t < 1) throw std::invalid_argument("vafaee braid: t >= 1 required");
  if (k < 2 || k > w - 1)
    throw std::invalid_argument("vafaee braid: 2 <= k <= w-1 required");
  if (s < 1) throw std::invalid_argument("vafaee braid: s >= 1 required");
  std::vector<int> letters;
  for (int r = 0; r < t; ++r)
    for (int i = w - 1; i >= 1; --i) letters.push_back(i);
  for (int r = 0; r < s * k; ++r)
    for (int i = w - 1; i >= w - k; --i) letters.push_back(i);
  return BraidWord(w, std::move(letters));
}

BraidWord make_baker_kegel_braid(int n) {
  if (n < 1) throw std::invalid_argument("baker-kegel braid: n >= 1 required");
  std::vector<int> letters;
  for (int r = 0; r < 2 * n + 1; ++r)
    letters.insert(letters.end(), {2, 1, 3, 2});
  letters.insert(letters.end(), {-1, 2, 1, 1, 2});
  return BraidWord(4, std::move(letters));
}

std::pair<int, int> standard_form(int k_param, int m) {
  if (k_param < 4 || k_param % 3 == 0)
    throw std::invalid_argument(
        "standard_form: k >= 4 with k != 0 mod 3 required");
  if (m < 0) throw std::invalid_argument("standard_form: m >= 0 required");
  if (k_param % 3 == 1) return {k_param, m};
  return {k_param - 1, m + 1};
}

BraidWord full_twist_word(int n) {
  if (n < 2) throw std::invalid_argument("full twist: n >= 2 required");
  std::vector<int> letters;
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

}  // namespace braidinv

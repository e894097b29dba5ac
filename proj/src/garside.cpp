#include "braidinv/garside.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidinv {

Permutation perm_identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation perm_half_twist(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

bool perm_is_identity(const Permutation& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Permutation perm_flip(const Permutation& p) {
  int n = static_cast<int>(p.size());
  Permutation q(n);
  for (int i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
  return q;
}

uint64_t starting_set(const Permutation& p) {
  uint64_t s = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) s |= uint64_t{1} << i;
  return s;
}

uint64_t finishing_set(const Permutation& p) {
  return starting_set(perm_inverse(p));
}

std::vector<int> perm_braid_word(const Permutation& p) {
  Permutation q = p;
  std::vector<int> word;
  while (true) {
    size_t i = 0;
    while (i + 1 < q.size() && q[i] < q[i + 1]) ++i;
    if (i + 1 >= q.size()) break;
    word.push_back(static_cast<int>(i) + 1);
    std::swap(q[i], q[i + 1]);
  }
  return word;
}

namespace {

// Move sigma_{i+1} from the front of b to the end of a: a' = a.sigma,
// b' = sigma^{-1}.b. Valid when i is in starting_set(b) \ finishing_set(a).
void shift_letter(Permutation& a, Permutation& b, int i) {
  for (int& v : a) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  std::swap(b[i], b[i + 1]);
}

// Make the pair (a, b) left-weighted: starting_set(b) inside finishing_set(a).
bool left_weight_pair(Permutation& a, Permutation& b) {
  bool changed = false;
  while (true) {
    uint64_t movable = starting_set(b) & ~finishing_set(a);
    if (!movable) return changed;
    shift_letter(a, b, std::countr_zero(movable));
    changed = true;
  }
}

// Bubble pass with backtracking; on exit every adjacent pair is
// left-weighted and no factor is the identity.
void left_weight_all(std::vector<Permutation>& factors) {
  size_t j = 0;
  while (j + 1 < factors.size()) {
    bool changed = left_weight_pair(factors[j], factors[j + 1]);
    if (perm_is_identity(factors[j + 1])) {
      factors.erase(factors.begin() + static_cast<long>(j) + 1);
      if (j > 0) --j;
      continue;
    }
    if (changed && j > 0)
      --j;
    else
      ++j;
  }
}

// Strip leading Delta factors into the infimum. Left-weighting forces every
// Delta factor to the front.
void extract_half_twists(std::vector<Permutation>& factors, long long& infimum,
                         const Permutation& half_twist) {
  size_t lead = 0;
  while (lead < factors.size() && factors[lead] == half_twist) ++lead;
  infimum += static_cast<long long>(lead);
  factors.erase(factors.begin(), factors.begin() + static_cast<long>(lead));
}

}  // namespace

NormalForm garside_normal_form(const BraidWord& b) {
  int n = b.strands;
  const Permutation half_twist = perm_half_twist(n);
  NormalForm nf;
  nf.strands = n;
  for (int letter : b.letters) {
    int i = std::abs(letter) - 1;
    if (letter > 0) {
      Permutation f = perm_identity(n);
      std::swap(f[i], f[i + 1]);
      nf.factors.push_back(std::move(f));
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); pulling Delta^{-1}
      // through the accumulated factors applies the flip to each.
      nf.infimum -= 1;
      for (Permutation& f : nf.factors) f = perm_flip(f);
      Permutation f = half_twist;
      for (int& v : f) {
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
      }
      nf.factors.push_back(std::move(f));
    }
  }
  left_weight_all(nf.factors);
  extract_half_twists(nf.factors, nf.infimum, half_twist);
  return nf;
}

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("nf_multiply: strand counts differ");
  NormalForm out;
  out.strands = a.strands;
  out.infimum = a.infimum + b.infimum;
  out.factors = a.factors;
  if (b.infimum % 2 != 0)
    for (Permutation& f : out.factors) f = perm_flip(f);
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  left_weight_all(out.factors);
  extract_half_twists(out.factors, out.infimum, perm_half_twist(out.strands));
  return out;
}

BraidWord nf_to_word(const NormalForm& nf) {
  if (nf.infimum < 0)
    throw std::domain_error("nf_to_word: negative infimum has no positive word");
  std::vector<int> letters;
  std::vector<int> delta = perm_braid_word(perm_half_twist(nf.strands));
  for (long long r = 0; r < nf.infimum; ++r)
    letters.insert(letters.end(), delta.begin(), delta.end());
  for (const Permutation& f : nf.factors) {
    std::vector<int> w = perm_braid_word(f);
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return BraidWord(nf.strands, std::move(letters));
}

bool is_twist_positive(const BraidWord& b) {
  if (!b.positive()) return false;
  // A positive word shorter than Delta^2 cannot contain a full twist.
  size_t full_twist_len = static_cast<size_t>(b.strands) * (b.strands - 1);
  if (b.letters.size() < full_twist_len) return false;
  return garside_normal_form(b).infimum >= 2;
}

std::optional<BraidWord> twist_positive_certificate(const BraidWord& b) {
  if (!b.positive()) return std::nullopt;
  NormalForm nf = garside_normal_form(b);
  if (nf.infimum < 2) return std::nullopt;
  NormalForm tail = nf;
  tail.infimum -= 2;
  return nf_to_word(tail);
}

}  // namespace braidinv

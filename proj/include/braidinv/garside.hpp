#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidinv/braid.hpp"

namespace braidinv {

// A permutation braid (positive braid in which each pair of strands crosses
// at most once) is represented by its permutation: perm[i] is the end
// position of the strand starting at position i, 0-based.
using Permutation = std::vector<int>;

Permutation perm_identity(int n);
// The half twist Delta: i -> n-1-i.
Permutation perm_half_twist(int n);
bool perm_is_identity(const Permutation& p);
Permutation perm_inverse(const Permutation& p);
// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
Permutation perm_flip(const Permutation& p);

// Bit i set <=> sigma_{i+1} can be split off the front (descent set).
uint64_t starting_set(const Permutation& p);
// Bit i set <=> the braid ends with sigma_{i+1} (descent set of the inverse).
uint64_t finishing_set(const Permutation& p);

// The canonical positive word of a permutation braid (1-based letters);
// length equals the inversion count.
std::vector<int> perm_braid_word(const Permutation& p);

// Left normal form Delta^infimum x_1 ... x_l with each consecutive factor
// pair left-weighted and no factor equal to the identity or Delta. Two words
// represent the same element of B_n iff their normal forms are equal.
struct NormalForm {
  int strands = 2;
  long long infimum = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm& o) const = default;
  long long canonical_length() const { return static_cast<long long>(factors.size()); }
};

NormalForm garside_normal_form(const BraidWord& b);

// Product of two elements given by normal forms (same strand count).
NormalForm nf_multiply(const NormalForm& a, const NormalForm& b);

// Expand back to a braid word; requires infimum >= 0.
BraidWord nf_to_word(const NormalForm& nf);

// True iff the word is positive and its normal form has infimum >= 2,
// i.e. the word equals Delta^2 gamma for a positive word gamma.
bool is_twist_positive(const BraidWord& b);

// The positive word gamma with b = Delta^2 gamma, when one exists.
std::optional<BraidWord> twist_positive_certificate(const BraidWord& b);

}  // namespace braidinv

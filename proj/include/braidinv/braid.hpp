#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidinv {

// Word in the Artin generators of B_n. Letters are nonzero integers: +i is
// sigma_i, -i is sigma_i^{-1}, 1 <= i <= strands-1. The empty word is the
// identity braid.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  bool positive() const;
  bool operator==(const BraidWord& o) const = default;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

// Text format: "<n>: <tok> <tok> ...", each token a nonzero integer;
// "(...)xk" repetition sugar accepted on input (either 'x' or the U+00D7
// times sign), never emitted.
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& b);

int writhe(const BraidWord& b);

// Permutation induced on strand positions {0..n-1}: perm[i] is where the
// strand starting at position i ends.
std::vector<int> braid_permutation(const BraidWord& b);

// Number of components of the closure = cycle count of the permutation.
int closure_components(const BraidWord& b);

// Replace each letter (i, s) by (n-i, s); conjugation by the half twist.
BraidWord conjugate_by_garside(const BraidWord& b);

// Rotate letters left by k (any integer); the closure is unchanged.
BraidWord cyclic_rotate(const BraidWord& b, long long k);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// (sigma_1 ... sigma_{p-1})^q on p strands.
BraidWord make_torus_braid(int p, int q);

// (sigma_2 sigma_1)^{k_param} (sigma_2)^{2m} on 3 strands; closure is the
// twisted torus link T(3, k_param; 2m), a knot iff k_param != 0 mod 3.
BraidWord make_twisted_torus_braid(int k_param, int m);

// (s1..s_{p1-1})^{q1} ... (s1..s_{ps-1})^{qs} on p_s strands,
// 2 <= p_1 <= ... <= p_s, q_i > 0.
BraidWord make_tlink_braid(const std::vector<std::pair<int, int>>& pairs);

// (sigma_b ... sigma_1)(sigma_{w-1} ... sigma_1)^t on w strands.
BraidWord make_one_bridge_braid(int w, int b, int t);

// (sigma_{w-1} ... sigma_1)^t (sigma_{w-1} ... sigma_{w-k})^{sk} on w strands.
BraidWord make_vafaee_braid(int w, int t, int k, int s);

// (sigma_2 sigma_1 sigma_3 sigma_2)^{2n+1} sigma_1^{-1} sigma_2 sigma_1
// sigma_1 sigma_2 on 4 strands.
BraidWord make_baker_kegel_braid(int n);

// Index (k', m') with k' = 1 mod 3 of a twisted torus knot isotopic to
// T(3, k_param; 2m): T(3, 3r+2; 2m) maps to T(3, 3r+1; 2m+2).
std::pair<int, int> standard_form(int k_param, int m);

// Full twist word (sigma_1 ... sigma_{n-1})^n.
BraidWord full_twist_word(int n);

}  // namespace braidinv

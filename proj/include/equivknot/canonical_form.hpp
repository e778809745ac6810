#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equivknot/braid.hpp"

namespace equivknot {

// Left-greedy (Garside) normal form: Delta^infimum * A_1 * ... * A_r with each
// A_k a proper nontrivial simple braid and every pair (A_k, A_{k+1})
// left-weighted. Simple braids are stored as their permutations (0-based images).
// Two words give identical forms iff they represent the same braid.
struct CanonicalForm {
  int strands = 1;
  std::int64_t infimum = 0;
  std::vector<std::vector<int>> factors;

  std::string to_string() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const BraidWord& w);

// Positive word spelling a canonical form (Delta powers must be nonnegative).
// Used to round-trip the form through canonical_form.
BraidWord canonical_representative(const CanonicalForm& form);

// Exact equality in the braid group. Exponent sum and permutation are checked
// first; the normal form decides the rest.
bool braids_equal(const BraidWord& a, const BraidWord& b);

}  // namespace equivknot

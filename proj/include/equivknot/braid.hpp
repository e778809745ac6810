#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equivknot/error.hpp"

namespace equivknot {

// Artin generator sigma_index (1-based) or its inverse.
struct Generator {
  int index = 1;
  bool positive = true;

  constexpr int exponent() const noexcept { return positive ? 1 : -1; }
  constexpr Generator inverse() const noexcept { return {index, !positive}; }
  friend constexpr bool operator==(const Generator&, const Generator&) = default;
};

constexpr Generator sigma(int index) noexcept { return {index, true}; }
constexpr Generator sigma_inv(int index) noexcept { return {index, false}; }

// A word in the Artin generators of the braid group on `strands` strands.
// Letters are read left to right; positions exposed by the API are 1-based.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Generator> letters = {});

  // Parses "1 2 -2 1" or "1,2,-2,1" (mixed separators allowed).
  static BraidWord parse(int strands, std::string_view text);
  // Positive word from a list of generator indices.
  static BraidWord positive(int strands, std::initializer_list<int> indices);

  int strands() const noexcept { return strands_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Generator> letters() const noexcept { return letters_; }

  // 1-based access.
  const Generator& at(std::size_t pos) const;

  int exponent_sum() const noexcept;
  bool is_positive() const noexcept;
  std::size_t count(int index) const noexcept;

  // Space-separated signed indices; parse(strands, to_string()) reproduces the word.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Generator> letters_;
};

// A permutation of {1..s}: images()[k-1] is the label found at position k after
// applying the transpositions of the word to the identity arrangement, first
// letter first.
class StrandPermutation {
 public:
  explicit StrandPermutation(std::vector<int> images);
  static StrandPermutation identity(int size);

  std::span<const int> images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  int cycle_count() const;

  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> images_;
};

StrandPermutation underlying_permutation(const BraidWord& w);
int closure_components(const BraidWord& w);

// Swaps the letters at pos and pos+1; they must be far apart (|i - j| >= 2).
BraidWord apply_commutation(const BraidWord& w, std::size_t pos);
// Rewrites a_i a_j a_i into a_j a_i a_j at pos..pos+2 (|i - j| = 1, equal signs).
BraidWord apply_braid_relation(const BraidWord& w, std::size_t pos);

bool can_commute(const Generator& a, const Generator& b) noexcept;
bool matches_braid_relation(std::span<const Generator> letters, std::size_t pos) noexcept;

}  // namespace equivknot

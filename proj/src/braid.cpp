#include "equivknot/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace equivknot {

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error("braid word needs at least one strand, got " + std::to_string(strands_));
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int i = letters_[k].index;
    if (i < 1 || i > strands_ - 1) {
      throw Error("generator index " + std::to_string(i) + " at position " + std::to_string(k + 1) +
                  " out of range for " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<Generator> letters;
  std::size_t k = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; };
  while (k < text.size()) {
    if (is_sep(text[k])) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(k, end - k);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
      throw ParseError("invalid braid letter '" + std::string(token) + "'");
    }
    letters.push_back({std::abs(value), value > 0});
    k = end;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::positive(int strands, std::initializer_list<int> indices) {
  std::vector<Generator> letters;
  letters.reserve(indices.size());
  for (int i : indices) letters.push_back(sigma(i));
  return BraidWord(strands, std::move(letters));
}

const Generator& BraidWord::at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size()) {
    throw Error("position " + std::to_string(pos) + " outside word of length " + std::to_string(letters_.size()));
  }
  return letters_[pos - 1];
}

int BraidWord::exponent_sum() const noexcept {
  int sum = 0;
  for (const auto& g : letters_) sum += g.exponent();
  return sum;
}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](const Generator& g) { return g.positive; });
}

std::size_t BraidWord::count(int index) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [index](const Generator& g) { return g.index == index; }));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out << ' ';
    out << letters_[k].exponent() * letters_[k].index;
  }
  return out.str();
}

StrandPermutation::StrandPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error("strand permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

StrandPermutation StrandPermutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  return StrandPermutation(std::move(images));
}

int StrandPermutation::cycle_count() const {
  std::vector<bool> visited(images_.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t k = start; !visited[k]; k = static_cast<std::size_t>(images_[k] - 1)) visited[k] = true;
  }
  return cycles;
}

StrandPermutation underlying_permutation(const BraidWord& w) {
  std::vector<int> images(static_cast<std::size_t>(w.strands()));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& g : w.letters()) {
    std::swap(images[static_cast<std::size_t>(g.index - 1)], images[static_cast<std::size_t>(g.index)]);
  }
  return StrandPermutation(std::move(images));
}

int closure_components(const BraidWord& w) { return underlying_permutation(w).cycle_count(); }

bool can_commute(const Generator& a, const Generator& b) noexcept { return std::abs(a.index - b.index) >= 2; }

bool matches_braid_relation(std::span<const Generator> letters, std::size_t pos) noexcept {
  if (pos < 1 || pos + 2 > letters.size()) return false;
  const Generator& a = letters[pos - 1];
  const Generator& b = letters[pos];
  const Generator& c = letters[pos + 1];
  return a == c && a.positive == b.positive && std::abs(a.index - b.index) == 1;
}

BraidWord apply_commutation(const BraidWord& w, std::size_t pos) {
  if (pos < 1 || pos + 1 > w.length()) throw RewriteError("commutation site outside word", pos);
  std::vector<Generator> letters(w.letters().begin(), w.letters().end());
  if (!can_commute(letters[pos - 1], letters[pos])) {
    throw RewriteError("letters " + std::to_string(letters[pos - 1].index) + " and " +
                           std::to_string(letters[pos].index) + " do not commute",
                       pos);
  }
  std::swap(letters[pos - 1], letters[pos]);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord apply_braid_relation(const BraidWord& w, std::size_t pos) {
  if (!matches_braid_relation(w.letters(), pos)) throw RewriteError("braid relation pattern mismatch", pos);
  std::vector<Generator> letters(w.letters().begin(), w.letters().end());
  std::swap(letters[pos - 1], letters[pos]);
  letters[pos + 1] = letters[pos - 1];
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace equivknot

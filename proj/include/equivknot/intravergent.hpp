#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "equivknot/braid.hpp"

namespace equivknot {

// Braid on s = 2n+1 strands with a word of even length 2m that is invariant
// under rotation by pi: the letter at position j mirrors the letter at
// position 2m+1-j under sigma_i -> sigma_{2n+1-i}, signs kept.
class IntravergentBraid {
 public:
  // Throws if `word` is not intravergent.
  explicit IntravergentBraid(BraidWord word);

  const BraidWord& word() const noexcept { return word_; }
  int strands() const noexcept { return word_.strands(); }
  int half_strands() const noexcept { return (word_.strands() - 1) / 2; }  // n
  std::size_t length() const noexcept { return word_.length(); }
  std::size_t half_length() const noexcept { return word_.length() / 2; }  // m
  const Generator& at(std::size_t pos) const { return word_.at(pos); }

  std::size_t mirror_position(std::size_t pos) const noexcept { return length() + 1 - pos; }
  Generator mirror(const Generator& g) const noexcept { return {strands() - g.index, g.positive}; }

  friend bool operator==(const IntravergentBraid&, const IntravergentBraid&) = default;

 private:
  BraidWord word_;
};

bool validate_intravergent(const BraidWord& w);

enum class MoveKind { Commutation, BraidRelation, Destabilization, TypeA, TypeB };

// Middle-four patterns accepted by the type B move:
// Descending: sigma_{n+1} sigma_n sigma_{n+1} sigma_n -> sigma_n sigma_{n+1}
// Ascending:  sigma_n sigma_{n+1} sigma_n sigma_{n+1} -> sigma_{n+1} sigma_n
enum class TypeBPattern { Descending, Ascending };

// One step of an equivariant unknotting sequence. `positions` lists every site
// the step touches (1-based): a commutation or braid relation and its mirror
// image (a single entry when the site is its own mirror), the two deleted
// letters of a destabilization, the two squares of a type A move, or the first
// position of the middle four letters of a type B move.
struct EquivariantMove {
  MoveKind kind = MoveKind::Commutation;
  std::vector<std::size_t> positions;
  TypeBPattern pattern = TypeBPattern::Descending;

  int cost() const noexcept;
  bool is_isotopy() const noexcept { return kind == MoveKind::Commutation || kind == MoveKind::BraidRelation; }
  std::string describe() const;

  friend bool operator==(const EquivariantMove&, const EquivariantMove&) = default;
};

std::string_view to_string(MoveKind kind) noexcept;
std::string_view to_string(TypeBPattern pattern) noexcept;

// Site positions that the symmetric operations touch, for logging.
std::vector<std::size_t> commutation_sites(const IntravergentBraid& b, std::size_t pos);
std::vector<std::size_t> braid_relation_sites(const IntravergentBraid& b, std::size_t pos);

IntravergentBraid symmetric_commutation(const IntravergentBraid& b, std::size_t pos);
IntravergentBraid symmetric_braid_relation(const IntravergentBraid& b, std::size_t pos);
IntravergentBraid symmetric_destabilization(const IntravergentBraid& b);
std::pair<IntravergentBraid, EquivariantMove> type_A_move(const IntravergentBraid& b, std::size_t pos);
std::pair<IntravergentBraid, EquivariantMove> type_B_move(const IntravergentBraid& b);

// Applies a logged step, checking that its recorded positions agree with the
// state it is applied to.
IntravergentBraid apply_move(const IntravergentBraid& b, const EquivariantMove& move);

}  // namespace equivknot

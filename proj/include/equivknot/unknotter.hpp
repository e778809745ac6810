#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "equivknot/braid.hpp"
#include "equivknot/intravergent.hpp"

namespace equivknot {

// ---------------------------------------------------------------------------
// Rewriting of words with a single sigma_1 at one end.

enum class Orientation { Left, Right };

enum class SigmaLowKind { Staircase, ContainsSquare, DisplacedSigmaOne };

// One elementary rewrite inside a word, 1-based.
struct LocalRewrite {
  MoveKind kind = MoveKind::Commutation;  // Commutation or BraidRelation
  std::size_t position = 0;
  friend bool operator==(const LocalRewrite&, const LocalRewrite&) = default;
};

// Result of one pass of the sigma_1 rewriting:
// - Staircase(i): the word is sigma_1 sigma_2 ... sigma_i (read from the
//   sigma_1 end),
// - ContainsSquare(i, position): sigma_i sigma_i (i > 1) sits at `position`,
// - DisplacedSigmaOne: the single sigma_1 no longer sits at its end.
// `steps` turn the input into `rewritten`; the lengths agree.
struct SigmaLowOutcome {
  SigmaLowKind kind = SigmaLowKind::Staircase;
  int index = 0;
  std::size_t square_position = 0;
  std::vector<LocalRewrite> steps;
  BraidWord rewritten;
};

// Plans the rewrite without applying it. Throws if `w` is not positive, does
// not start (Left) or end (Right) with sigma_1, or has another sigma_1.
SigmaLowOutcome sigma_low_rewrite(const BraidWord& w, Orientation orientation = Orientation::Left);

// ---------------------------------------------------------------------------
// Certified equivariant unknotting.

struct MoveLog {
  IntravergentBraid initial;
  std::vector<EquivariantMove> steps;
  int total_cost = 0;

  int computed_cost() const noexcept;
  std::size_t count(MoveKind kind) const noexcept;
};

struct UnknotOptions {
  // Depth of the breadth-first search over symmetric isotopies used when a
  // prescribed rewriting sequence does not apply or makes no progress. Read
  // from SI_UNKNOT_SEARCH_DEPTH when unset (default 16).
  std::optional<int> search_depth;
};

struct UnknotStats {
  std::size_t macro_steps = 0;
  std::size_t fallback_searches = 0;
};

// Thrown when no rewriting case applies; carries a dump of the state. Must be
// unreachable for valid input.
class UnknotterInternalError : public Error {
 public:
  using Error::Error;
};

// Unknots a positive intravergent braid whose closure is a knot. The log's
// total cost equals (length - strands + 1) / 2.
MoveLog equivariant_unknot(const IntravergentBraid& b, const UnknotOptions& options = {},
                           UnknotStats* stats = nullptr);

int default_search_depth();

enum class IsotopyCheck { Cheap, Full };

struct VerificationReport {
  bool passed = true;
  std::optional<std::size_t> failing_step;  // 1-based
  std::string message;
  std::size_t steps_checked = 0;
  int replayed_cost = 0;
};

// Replays a log from its initial braid and checks every step, the final state
// and the cost arithmetic. Never throws for malformed logs; failures are
// reported.
VerificationReport verify_move_log(const MoveLog& log, IsotopyCheck check = IsotopyCheck::Full);

}  // namespace equivknot

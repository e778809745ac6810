#include <algorithm>

#include "equivknot/unknotter.hpp"

namespace equivknot {
namespace {

// Left-oriented plan on a word that starts with its only sigma_1. Compares the
// word against the staircase sigma_1 sigma_2 sigma_3 ... and acts on the first
// deviation sigma_i at position j.
SigmaLowOutcome plan_left(const BraidWord& w) {
  SigmaLowOutcome out;
  const std::size_t x = w.length();
  std::size_t j = 2;
  for (; j <= x; ++j) {
    if (w.at(j).index != static_cast<int>(j)) break;
  }
  if (j > x) {
    out.kind = SigmaLowKind::Staircase;
    out.index = static_cast<int>(x);
    return out;
  }
  const int i = w.at(j).index;
  const int jj = static_cast<int>(j);
  if (i == jj - 1) {
    out.kind = SigmaLowKind::ContainsSquare;
    out.index = i;
    out.square_position = j - 1;
    return out;
  }
  out.kind = SigmaLowKind::DisplacedSigmaOne;
  if (i > jj) {
    // sigma_i commutes with every earlier staircase letter: move it to the front.
    for (std::size_t p = j - 1; p >= 1; --p) out.steps.push_back({MoveKind::Commutation, p});
    return out;
  }
  // i < j - 1: slide sigma_i left until it meets sigma_{i+1}, apply the braid
  // relation to sigma_i sigma_{i+1} sigma_i, then move the new leading
  // sigma_{i+1} to the front.
  const auto ip = static_cast<std::size_t>(i);
  for (std::size_t p = j - 1; p >= ip + 2; --p) out.steps.push_back({MoveKind::Commutation, p});
  out.steps.push_back({MoveKind::BraidRelation, ip});
  for (std::size_t p = ip - 1; p >= 1; --p) out.steps.push_back({MoveKind::Commutation, p});
  return out;
}

BraidWord reversed(const BraidWord& w) {
  std::vector<Generator> letters(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord apply_steps(BraidWord w, const std::vector<LocalRewrite>& steps) {
  for (const auto& step : steps) {
    w = step.kind == MoveKind::Commutation ? apply_commutation(w, step.position)
                                           : apply_braid_relation(w, step.position);
  }
  return w;
}

}  // namespace

SigmaLowOutcome sigma_low_rewrite(const BraidWord& w, Orientation orientation) {
  if (w.empty() || !w.is_positive()) throw Error("sigma_1 rewriting needs a nonempty positive word");
  const std::size_t end = orientation == Orientation::Left ? 1 : w.length();
  if (w.at(end).index != 1) {
    throw Error(std::string("word must ") + (orientation == Orientation::Left ? "begin" : "end") + " with sigma_1");
  }
  if (w.count(1) != 1) throw Error("word must contain exactly one sigma_1");

  if (orientation == Orientation::Left) {
    SigmaLowOutcome out = plan_left(w);
    out.rewritten = apply_steps(w, out.steps);
    return out;
  }

  const std::size_t x = w.length();
  SigmaLowOutcome out = plan_left(reversed(w));
  // Reversal maps a commutation at k to x - k, a braid relation at k to
  // x - k - 1 and a square at k to x - k.
  for (auto& step : out.steps) {
    step.position = step.kind == MoveKind::Commutation ? x - step.position : x - step.position - 1;
  }
  if (out.kind == SigmaLowKind::ContainsSquare) out.square_position = x - out.square_position;
  out.rewritten = apply_steps(w, out.steps);
  return out;
}

}  // namespace equivknot

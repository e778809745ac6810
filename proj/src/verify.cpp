#include <sstream>

#include "equivknot/canonical_form.hpp"
#include "equivknot/unknotter.hpp"

namespace equivknot {
namespace {

bool cheap_equal(const BraidWord& a, const BraidWord& b) {
  return a.strands() == b.strands() && a.exponent_sum() == b.exponent_sum() &&
         underlying_permutation(a) == underlying_permutation(b);
}

}  // namespace

VerificationReport verify_move_log(const MoveLog& log, IsotopyCheck check) {
  VerificationReport report;
  auto fail_at = [&](std::size_t step, const std::string& why) {
    report.passed = false;
    report.failing_step = step;
    report.message = "step " + std::to_string(step) + ": " + why;
    return report;
  };

  IntravergentBraid state = log.initial;
  if (closure_components(state.word()) != 1) {
    report.passed = false;
    report.message = "initial braid does not close to a knot";
    return report;
  }
  // Canonical form of the current state, reused as the "before" of the next isotopy.
  std::optional<CanonicalForm> current_form;

  for (std::size_t k = 0; k < log.steps.size(); ++k) {
    const EquivariantMove& move = log.steps[k];
    const std::size_t step = k + 1;
    IntravergentBraid next = state;
    try {
      next = apply_move(state, move);
    } catch (const std::exception& e) {
      return fail_at(step, std::string(to_string(move.kind)) + " rejected: " + e.what());
    }
    if (!validate_intravergent(next.word())) return fail_at(step, "result is not intravergent");
    if (closure_components(next.word()) != 1) return fail_at(step, "closure is no longer a knot");
    if (move.is_isotopy()) {
      if (check == IsotopyCheck::Cheap) {
        if (!cheap_equal(state.word(), next.word())) return fail_at(step, "isotopy changed exponent sum or permutation");
      } else {
        if (!current_form) current_form = canonical_form(state.word());
        CanonicalForm next_form = canonical_form(next.word());
        if (!(next_form == *current_form)) return fail_at(step, "isotopy changed the braid");
        current_form = std::move(next_form);
      }
    } else {
      current_form.reset();
    }
    report.replayed_cost += move.cost();
    ++report.steps_checked;
    state = std::move(next);
  }

  if (state.strands() != 1 || state.length() != 0) {
    std::ostringstream out;
    out << "final state is not the trivial braid (strands=" << state.strands() << ", length=" << state.length() << ")";
    report.passed = false;
    report.message = out.str();
    return report;
  }
  if (report.replayed_cost != log.total_cost) {
    report.passed = false;
    report.message = "recorded total cost " + std::to_string(log.total_cost) + " differs from replayed cost " +
                     std::to_string(report.replayed_cost);
    return report;
  }
  const int a_moves = static_cast<int>(log.count(MoveKind::TypeA));
  const int b_moves = static_cast<int>(log.count(MoveKind::TypeB));
  if (log.total_cost != 2 * a_moves + b_moves) {
    report.passed = false;
    report.message = "total cost does not equal 2 * type A + type B";
    return report;
  }
  report.message = "ok";
  return report;
}

}  // namespace equivknot

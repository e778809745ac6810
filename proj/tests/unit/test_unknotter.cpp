#include <doctest.h>

#include <cstdlib>

#include "equivknot/canonical_form.hpp"
#include "equivknot/torus.hpp"
#include "equivknot/unknotter.hpp"
#include "oracles/free_group_action.hpp"
#include "support/generators.hpp"

using namespace equivknot;

namespace {

int expected_cost(const IntravergentBraid& b) {
  return (static_cast<int>(b.length()) - b.strands() + 1) / 2;
}

// Checks every clause of the outcome contract for a left-oriented rewrite.
void check_outcome(const BraidWord& w, const SigmaLowOutcome& out) {
  CHECK(out.rewritten.length() == w.length());
  CHECK(braids_equal(out.rewritten, w));
  CHECK(oracle::artin_equal(out.rewritten, w));
  switch (out.kind) {
    case SigmaLowKind::Staircase:
      for (int i = 1; i <= out.index; ++i) CHECK(out.rewritten.at(static_cast<std::size_t>(i)) == sigma(i));
      CHECK(out.rewritten.length() == static_cast<std::size_t>(out.index));
      break;
    case SigmaLowKind::ContainsSquare:
      CHECK(out.index > 1);
      CHECK(out.rewritten.at(out.square_position) == sigma(out.index));
      CHECK(out.rewritten.at(out.square_position + 1) == sigma(out.index));
      break;
    case SigmaLowKind::DisplacedSigmaOne:
      CHECK(out.rewritten.count(1) == 1);
      CHECK(out.rewritten.at(1).index != 1);
      break;
  }
}

}  // namespace

TEST_CASE("sigma_1 rewriting outcomes") {
  const SigmaLowOutcome a = sigma_low_rewrite(BraidWord::positive(3, {1}));
  CHECK(a.kind == SigmaLowKind::Staircase);
  CHECK(a.index == 1);

  const SigmaLowOutcome b = sigma_low_rewrite(BraidWord::positive(3, {1, 2, 2}));
  CHECK(b.kind == SigmaLowKind::ContainsSquare);
  CHECK(b.index == 2);
  CHECK(b.square_position == 2);

  const SigmaLowOutcome c = sigma_low_rewrite(BraidWord::positive(5, {1, 3}));
  CHECK(c.kind == SigmaLowKind::DisplacedSigmaOne);
  CHECK(c.rewritten == BraidWord::positive(5, {3, 1}));

  // i < j - 1: sigma_2 slides left, meets sigma_3 and the relation fires.
  const BraidWord w = BraidWord::positive(6, {1, 2, 3, 2});
  const SigmaLowOutcome d = sigma_low_rewrite(w);
  CHECK(d.kind == SigmaLowKind::DisplacedSigmaOne);
  check_outcome(w, d);

  CHECK_THROWS(sigma_low_rewrite(BraidWord::positive(3, {2, 1})));
  CHECK_THROWS(sigma_low_rewrite(BraidWord::positive(3, {1, 2, 1})));
  CHECK_THROWS(sigma_low_rewrite(BraidWord::parse(3, "1 -2")));
}

TEST_CASE("sigma_1 rewriting from the right end") {
  const BraidWord w = BraidWord::positive(5, {3, 1});
  const SigmaLowOutcome out = sigma_low_rewrite(w, Orientation::Right);
  CHECK(out.kind == SigmaLowKind::DisplacedSigmaOne);
  CHECK(out.rewritten == BraidWord::positive(5, {1, 3}));
  const SigmaLowOutcome sq = sigma_low_rewrite(BraidWord::positive(4, {3, 2, 2, 1}), Orientation::Right);
  CHECK(sq.kind == SigmaLowKind::ContainsSquare);
  CHECK(sq.rewritten.at(sq.square_position) == sigma(2));
  CHECK(sq.rewritten.at(sq.square_position + 1) == sigma(2));
}

TEST_CASE("property: sigma_1 rewriting is length preserving, braid equal and outcome correct") {
  testgen::Rng rng(0x51617);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 500; ++trial) {
    const int s = testgen::uniform(rng, 3, 8);
    const BraidWord w = testgen::random_sigma_low_word(rng, s, testgen::uniform(rng, 1, 9));
    const SigmaLowOutcome out = sigma_low_rewrite(w);
    ++counts[static_cast<int>(out.kind)];
    check_outcome(w, out);
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("small unknotting examples") {
  const MoveLog unknot = equivariant_unknot(IntravergentBraid(BraidWord::positive(3, {1, 2})));
  CHECK(unknot.total_cost == 0);
  CHECK(verify_move_log(unknot).passed);

  const MoveLog trefoil = equivariant_unknot(torus_braid(3, 2));
  CHECK(trefoil.total_cost == 1);
  CHECK(verify_move_log(trefoil).passed);

  const MoveLog t35 = equivariant_unknot(torus_braid(3, 5));
  CHECK(t35.total_cost == 4);
  const VerificationReport report = verify_move_log(t35);
  CHECK(report.passed);
  CHECK(report.replayed_cost == 4);
  CHECK(report.steps_checked == t35.steps.size());

  CHECK_THROWS(equivariant_unknot(IntravergentBraid(BraidWord::positive(3, {1, 2, 1, 2, 1, 2}))));
  CHECK_THROWS(equivariant_unknot(IntravergentBraid(BraidWord::parse(3, "-1 -2"))));
}

TEST_CASE("random braid on 7 strands of length 18 costs 6") {
  testgen::Rng rng(7018);
  int found = 0;
  while (found < 5) {
    BraidWord w = testgen::random_symmetric_word(rng, 7, 9);
    if (closure_components(w) != 1) continue;
    ++found;
    const IntravergentBraid b(std::move(w));
    const MoveLog log = equivariant_unknot(b);
    CHECK(log.total_cost == 6);
    CHECK(verify_move_log(log).passed);
  }
}

TEST_CASE("verifier rejects corrupted logs") {
  const MoveLog good = equivariant_unknot(torus_braid(3, 5));
  REQUIRE(verify_move_log(good).passed);

  std::size_t a_step = 0;
  for (std::size_t k = 0; k < good.steps.size(); ++k) {
    if (good.steps[k].kind == MoveKind::TypeA) {
      a_step = k;
      break;
    }
  }
  REQUIRE(good.steps[a_step].kind == MoveKind::TypeA);
  MoveLog bad = good;
  bad.steps[a_step].positions.back() += 1;
  const VerificationReport r = verify_move_log(bad);
  CHECK_FALSE(r.passed);
  REQUIRE(r.failing_step.has_value());
  CHECK(*r.failing_step == a_step + 1);

  MoveLog wrong_total = good;
  wrong_total.total_cost += 1;
  CHECK_FALSE(verify_move_log(wrong_total).passed);

  MoveLog truncated = good;
  truncated.steps.pop_back();
  truncated.total_cost = truncated.computed_cost();
  CHECK_FALSE(verify_move_log(truncated).passed);

  const MoveLog trivial{IntravergentBraid(BraidWord(1)), {}, 0};
  CHECK(verify_move_log(trivial).passed);
}

TEST_CASE("search depth comes from the environment when not given") {
  const char* saved = std::getenv("SI_UNKNOT_SEARCH_DEPTH");
  const std::string restore = saved ? saved : "";
  ::setenv("SI_UNKNOT_SEARCH_DEPTH", "5", 1);
  CHECK(default_search_depth() == 5);
  ::unsetenv("SI_UNKNOT_SEARCH_DEPTH");
  CHECK(default_search_depth() == 16);
  if (saved) ::setenv("SI_UNKNOT_SEARCH_DEPTH", restore.c_str(), 1);
}

TEST_CASE("property: unknotting cost is exact and every log verifies") {
  testgen::Rng rng(0xC057);
  for (int trial = 0; trial < 120; ++trial) {
    const int s = 2 * testgen::uniform(rng, 1, 4) + 1;
    const IntravergentBraid b = testgen::random_intravergent_knot(rng, s, 30);
    UnknotStats stats;
    const MoveLog log = equivariant_unknot(b, {}, &stats);
    CHECK(log.total_cost == expected_cost(b));
    CHECK(log.total_cost == log.computed_cost());
    CHECK(log.total_cost ==
          2 * static_cast<int>(log.count(MoveKind::TypeA)) + static_cast<int>(log.count(MoveKind::TypeB)));
    // Replay by hand: every intermediate closure stays a knot.
    IntravergentBraid state = log.initial;
    for (const auto& step : log.steps) {
      state = apply_move(state, step);
      CHECK(closure_components(state.word()) == 1);
    }
    CHECK(state.strands() == 1);
    CHECK(state.length() == 0);
    CHECK(verify_move_log(log).passed);
  }
}

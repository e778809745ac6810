// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact;
// the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "equivknot/canonical_form.hpp"
#include "equivknot/knot_descriptor.hpp"
#include "equivknot/nonadditivity.hpp"
#include "equivknot/signature.hpp"
#include "equivknot/torus.hpp"
#include "equivknot/two_bridge.hpp"
#include "equivknot/unknotter.hpp"
#include "oracles/free_group_action.hpp"
#include "oracles/inertia_oracle.hpp"
#include "oracles/number_oracles.hpp"
#include "oracles/positive_reachability.hpp"
#include "support/generators.hpp"

using namespace equivknot;

namespace {

constexpr double kTorusBudgetSeconds = 60.0;
constexpr double kRandomBraidBudgetSeconds = 300.0;
constexpr double kFourMoveBudgetSeconds = 1.0;
constexpr double kReportBudgetSeconds = 10.0;

constexpr std::uint64_t kRandomBraidSeed = 20240601;
constexpr std::uint64_t kMatrixSeed = 7001;
constexpr std::uint64_t kBraidOracleSeed = 7002;
constexpr std::uint64_t kSigmaLowSeed = 7003;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    std::ostringstream out;
    out << failures_ << " failure(s): " << messages_.str();
    return {false, out.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream messages_;
};

Outcome torus_knots() {
  Tally t;
  int pairs = 0;
  for (int p = 2; p <= 31; ++p) {
    for (int q = 2; p * q <= 63; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const std::string name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
      const MoveLog log = equivariant_unknot(torus_braid(p, q));
      const int expected = (p - 1) * (q - 1) / 2;
      t.require(log.total_cost == expected,
                name + " cost " + std::to_string(log.total_cost) + " != " + std::to_string(expected));
      const VerificationReport report = verify_move_log(log, IsotopyCheck::Full);
      t.require(report.passed, name + " log: " + report.message);
    }
  }
  return t.outcome(std::to_string(pairs) + " ordered coprime pairs with pq <= 63, exact cost, full verification");
}

Outcome random_braids() {
  Tally t;
  testgen::Rng rng(kRandomBraidSeed);
  const int strand_choices[] = {3, 5, 7, 9};
  int fallbacks = 0;
  for (int k = 0; k < 200; ++k) {
    const int s = strand_choices[k % 4];
    const IntravergentBraid b = testgen::random_intravergent_knot(rng, s, 40);
    UnknotStats stats;
    const MoveLog log = equivariant_unknot(b, {}, &stats);
    fallbacks += stats.fallback_searches > 0;
    const int expected = (static_cast<int>(b.length()) - s + 1) / 2;
    t.require(log.total_cost == expected, "braid " + b.word().to_string() + " on " + std::to_string(s) +
                                              " strands cost " + std::to_string(log.total_cost));
    const VerificationReport report = verify_move_log(log, IsotopyCheck::Full);
    t.require(report.passed, "braid " + b.word().to_string() + ": " + report.message);
  }
  return t.outcome("200 braids, cost = (l-s+1)/2, all logs verified (" + std::to_string(fallbacks) +
                   " used the search fallback)");
}

Outcome continued_fraction_lock() {
  Tally t;
  for (long long m = -100; m <= 100; ++m) {
    const TwoBridgeFraction cf = eval_continued_fraction({6, -1, 2 * m + 1, -1, 6});
    const TwoBridgeFraction closed{7 * (14 * m + 19), 2 * (7 * m + 10)};
    t.require(cf == closed, "m=" + std::to_string(m) + ": " + cf.to_string() + " != " + closed.to_string());
    t.require(jm_fraction(m) == closed, "jm_fraction(" + std::to_string(m) + ")");
  }
  return t.outcome("[6,-1,2m+1,-1,6] = 7(14m+19)/(2(7m+10)) for m in [-100,100]");
}

Outcome four_move_criterion() {
  Tally t;
  t.require(!u4_equals_one({5, 2}).has_value(), "5/2 has a witness");
  const auto trefoil = u4_equals_one({3, 1});
  t.require(trefoil.has_value() && trefoil->r == 1 && trefoil->s == 1, "3/1 witness is not (1,1)");
  t.require(oracle::trefoil_four_move().after_is_unknot, "4-move on the trefoil does not give the unknot");
  for (long long m = -5; m <= 2; ++m) {
    t.require(!u4_equals_one(jm_fraction(m)).has_value(), "jm_fraction(" + std::to_string(m) + ") has a witness");
  }
  return t.outcome("5/2 none, 3/1 (r,s)=(1,1), J_m fractions m=-5..2 none");
}

Outcome signature_pipeline() {
  Tally t;
  const long long sum = signature_magnitude(KnotDescriptor::parse("T(2,7) # T(2,7)"));
  t.require(sum == 12, "|sigma(T(2,7)#T(2,7))| = " + std::to_string(sum));
  std::vector<long long> small;
  for (long long m = -100; m <= 100; ++m) {
    const long long sig = signature_q2_jm(m);
    t.require(sig >= -2 * m - 6 && sig <= -2 * m, "sigma at m=" + std::to_string(m) + " outside window");
    if (std::abs(sig) < 6) small.push_back(m);
  }
  const std::vector<long long> expected{-5, -4, -3, -2, -1, 0, 1, 2};
  std::ostringstream got;
  for (std::size_t k = 0; k < small.size(); ++k) got << (k ? "," : "") << small[k];
  t.require(small == expected, "{m : |sigma| < 6} = {" + got.str() + "}, expected {-5,...,2}");
  return t.outcome("|sigma| = 12, windows hold, {m : |sigma| < 6} = {" + got.str() + "}");
}

Outcome nonadditivity() {
  Tally t;
  const NonAdditivityReport report = nonadditivity_report();
  for (const auto& check : report.checks) t.require(check.passed, check.id + ": " + check.detail);
  t.require(report.passed, "report not marked passed");
  t.require(report.conclusion.find(">= 3 > 2") != std::string::npos, "conclusion: " + report.conclusion);
  return t.outcome(std::to_string(report.checks.size()) + " sub-checks, " + report.conclusion);
}

Outcome oracle_suites() {
  Tally t;
  testgen::Rng mrng(kMatrixSeed);
  for (int k = 0; k < 1000; ++k) {
    const int n = testgen::uniform(mrng, 1, 5);
    const SymmetricIntegerMatrix m = k % 2 ? testgen::random_symmetric_matrix(mrng, n, 5)
                                           : testgen::random_sparse_symmetric_matrix(mrng, n, 5);
    t.require(matrix_signature(m) == oracle::inertia_by_descartes(m), "matrix inertia mismatch");
  }

  testgen::Rng brng(kBraidOracleSeed);
  int equal_pairs = 0;
  for (int k = 0; k < 1000; ++k) {
    const int s = testgen::uniform(brng, 2, 4);
    const int len = testgen::uniform(brng, 0, 6);
    if (k % 2 == 0) {
      // Positive words: exhaustive reachability by relation moves.
      const BraidWord a = testgen::random_positive_word(brng, s, len);
      const auto cls = oracle::positive_class(oracle::indices(a));
      auto it = cls.begin();
      std::advance(it, testgen::uniform(brng, 0, static_cast<int>(cls.size()) - 1));
      std::vector<Generator> letters;
      for (int i : *it) letters.push_back(sigma(i));
      const BraidWord b(s, letters);
      const BraidWord c = testgen::random_positive_word(brng, s, len);
      t.require(braids_equal(a, b), "positive class member " + b.to_string() + " vs " + a.to_string());
      const bool reach = oracle::positive_reachable(a, c);
      equal_pairs += reach;
      t.require(braids_equal(a, c) == reach, "positive pair " + a.to_string() + " / " + c.to_string());
    } else {
      // Signed words: the Artin action on the free group.
      const BraidWord a = testgen::random_word(brng, s, len);
      const BraidWord c = testgen::random_word(brng, s, testgen::uniform(brng, 0, 6));
      const bool same = oracle::artin_equal(a, c);
      equal_pairs += same;
      t.require(braids_equal(a, c) == same, "signed pair " + a.to_string() + " / " + c.to_string());
    }
  }

  testgen::Rng srng(kSigmaLowSeed);
  for (int k = 0; k < 500; ++k) {
    const int s = testgen::uniform(srng, 3, 8);
    const BraidWord w = testgen::random_sigma_low_word(srng, s, testgen::uniform(srng, 1, 9));
    const SigmaLowOutcome out = sigma_low_rewrite(w);
    t.require(out.rewritten.length() == w.length(), "sigma_1 rewrite changed length of " + w.to_string());
    t.require(braids_equal(out.rewritten, w) && oracle::artin_equal(out.rewritten, w),
              "sigma_1 rewrite changed the braid " + w.to_string());
    bool shape = false;
    switch (out.kind) {
      case SigmaLowKind::Staircase: {
        shape = out.rewritten.length() == static_cast<std::size_t>(out.index);
        for (int i = 1; shape && i <= out.index; ++i) shape = out.rewritten.at(static_cast<std::size_t>(i)) == sigma(i);
        break;
      }
      case SigmaLowKind::ContainsSquare:
        shape = out.index > 1 && out.rewritten.at(out.square_position) == sigma(out.index) &&
                out.rewritten.at(out.square_position + 1) == sigma(out.index);
        break;
      case SigmaLowKind::DisplacedSigmaOne:
        shape = out.rewritten.count(1) == 1 && out.rewritten.at(1).index != 1;
        break;
    }
    t.require(shape, "sigma_1 rewrite outcome wrong for " + w.to_string());
  }
  return t.outcome("1000 matrices, 1000 braid pairs (" + std::to_string(equal_pairs) +
                   " equal), 500 sigma_1 words");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "torus knot equivariant unknotting", kTorusBudgetSeconds, torus_knots},
      {2, "cost exactness on random braids", kRandomBraidBudgetSeconds, random_braids},
      {3, "continued fraction convention", 0, continued_fraction_lock},
      {4, "4-move criterion", kFourMoveBudgetSeconds, four_move_criterion},
      {5, "signature pipeline", 0, signature_pipeline},
      {6, "non-additivity report", kReportBudgetSeconds, nonadditivity},
      {7, "oracle suites", 0, oracle_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.passed = false;
      outcome.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    failed += !outcome.passed;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << ", "
              << static_cast<long long>(seconds * 1000) << " ms): " << outcome.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

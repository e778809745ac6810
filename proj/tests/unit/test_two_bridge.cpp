#include <doctest.h>

#include "equivknot/two_bridge.hpp"
#include "oracles/number_oracles.hpp"
#include "support/generators.hpp"

using namespace equivknot;

namespace {

TwoBridgeFraction frac(long long p, long long q) { return {p, q}; }

}  // namespace

TEST_CASE("continued fractions") {
  CHECK(eval_continued_fraction({7}) == frac(7, 1));
  CHECK(eval_continued_fraction({6, -1, 7, -1, 6}) == frac(427, 62));
  CHECK(eval_continued_fraction({6, -1, -9, -1, 6}) == frac(-357, -50));
  // [2, 1, 1]: the suffix [1, 1] evaluates to 0.
  CHECK_THROWS_WITH(eval_continued_fraction({2, 1, 1}), doctest::Contains("[1,1]"));
}

TEST_CASE("J_m fractions") {
  CHECK(jm_fraction(-5) == frac(-357, -50));
  CHECK(jm_fraction(2) == frac(329, 48));
  CHECK(jm_fraction(0) == frac(133, 20));
  CHECK(eval_continued_fraction({6, -1, 1, -1, 6}) == frac(133, 20));
}

TEST_CASE("property: continued fraction matches an exact rational oracle") {
  testgen::Rng rng(0xCF);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<long long> coeffs(static_cast<std::size_t>(testgen::uniform(rng, 1, 7)));
    for (auto& c : coeffs) c = testgen::uniform(rng, -9, 9);
    const auto expected = oracle::continued_fraction_value(coeffs);
    std::vector<BigInt> big(coeffs.begin(), coeffs.end());
    if (!expected) {
      CHECK_THROWS(eval_continued_fraction(big));
      continue;
    }
    const TwoBridgeFraction got = eval_continued_fraction(big);
    if (got.q == 0) continue;  // oracle only sees values, 1/0 needs the recurrence
    CHECK(oracle::Rational(got.p) / oracle::Rational(got.q) == *expected);
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("fraction parsing") {
  CHECK(TwoBridgeFraction::parse("-357/-50") == frac(-357, -50));
  CHECK(TwoBridgeFraction::parse(" 5/2 ") == frac(5, 2));
  CHECK(TwoBridgeFraction::parse("123456789012345678901234567/2").p ==
        BigInt("123456789012345678901234567"));
  CHECK_THROWS_AS(TwoBridgeFraction::parse("6/4"), ParseError);
  CHECK_THROWS_AS(TwoBridgeFraction::parse("0/1"), ParseError);
  CHECK_THROWS_AS(TwoBridgeFraction::parse("5"), ParseError);
  CHECK_THROWS_AS(TwoBridgeFraction::parse("5/x"), ParseError);
  CHECK(TwoBridgeFraction::parse(frac(-7, 3).to_string()) == frac(-7, 3));
}

TEST_CASE("normalize") {
  const NormalizedFraction a = normalize(frac(-357, -50));
  CHECK(a.fraction == frac(357, 50));
  CHECK_FALSE(a.mirrored);
  CHECK(normalize(frac(5, 7)).fraction == frac(5, 2));
  const NormalizedFraction c = normalize(frac(5, -2));
  CHECK(c.fraction == frac(5, 3));
  CHECK(c.mirrored);
  CHECK(normalize(frac(1, 4)).fraction == frac(1, 0));
  CHECK(normalize(frac(-1, 4)).fraction.is_unknot());
}

TEST_CASE("same_knot") {
  CHECK(same_knot(frac(5, 2), frac(5, 3)));
  CHECK(same_knot(frac(7, 1), frac(7, 1)));
  CHECK_FALSE(same_knot(frac(5, 2), frac(7, 2)));
  // 7/2 and 7/4 are inverses mod 7; 7/3 is the mirror of 7/4.
  CHECK(same_knot(frac(7, 2), frac(7, 4), true));
  CHECK_FALSE(same_knot(frac(7, 2), frac(7, 3), true));
  CHECK(same_knot(frac(7, 2), frac(7, 3), false));
}

TEST_CASE("torus fractions") {
  CHECK(is_torus_fraction(frac(7, 1)) == BigInt(3));
  CHECK(is_torus_fraction(frac(7, 6)) == BigInt(3));
  CHECK_FALSE(is_torus_fraction(frac(5, 2)).has_value());
  for (long long m = -20; m <= 20; ++m) CHECK_FALSE(is_torus_fraction(jm_fraction(m)).has_value());
}

TEST_CASE("u4 criterion on named knots") {
  std::vector<U4Candidate> trace;
  CHECK_FALSE(u4_equals_one(frac(5, 2), &trace).has_value());
  // The only coprime factorizations of (5 +- 1)/4 have |s| = 1, and 4 is
  // congruent to none of 2, 3 (mod 5).
  bool saw_candidate = false;
  for (const auto& c : trace) {
    if (!c.coprime) continue;
    saw_candidate = true;
    CHECK(abs(c.s) == 1);
    CHECK(c.residue == 4);
    CHECK_FALSE(c.matched);
  }
  CHECK(saw_candidate);

  const auto w = u4_equals_one(frac(3, 1));
  REQUIRE(w.has_value());
  CHECK(w->r == 1);
  CHECK(w->s == 1);
  CHECK(verify_u4_witness(frac(3, 1), *w));

  for (long long m = -5; m <= 2; ++m) CHECK_FALSE(u4_equals_one(jm_fraction(m)).has_value());

  CHECK_THROWS_WITH(u4_equals_one(frac(1, 0)), doctest::Contains("already unknot"));
  CHECK_THROWS(u4_equals_one(frac(4, 1)));
}

TEST_CASE("trefoil 4-move oracle agrees with the witness") {
  const auto move = oracle::trefoil_four_move();
  CHECK(closure_components(move.before) == 1);
  CHECK(move.after_is_unknot);
  CHECK(u4_equals_one(frac(3, 1)).has_value());
}

TEST_CASE("property: u4 decision agrees with a brute-force search") {
  for (long long p = 3; p <= 99; p += 2) {
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto w = u4_equals_one(frac(p, q));
      CHECK(w.has_value() == oracle::u4_brute_force(p, q));
      if (w) CHECK(verify_u4_witness(frac(p, q), *w));
    }
  }
}

TEST_CASE("property: u4 decision is invariant under knot equivalence") {
  testgen::Rng rng(0x44);
  for (int trial = 0; trial < 300; ++trial) {
    const long long p = 2 * testgen::uniform(rng, 1, 200) + 1;
    long long q = testgen::uniform(rng, 1, static_cast<int>(p - 1));
    if (std::gcd(p, q) != 1) continue;
    const BigInt inv = mod_inverse(q, p);
    const bool base = u4_equals_one(frac(p, q)).has_value();
    CHECK(u4_equals_one(frac(p, p - q)).has_value() == base);
    CHECK(u4_equals_one({p, inv}).has_value() == base);
    CHECK(u4_equals_one(frac(-p, q + 3 * p)).has_value() == base);
  }
}

TEST_CASE("property: same_knot is an equivalence and normalize is idempotent") {
  std::vector<TwoBridgeFraction> fs;
  for (long long q = 1; q < 21; ++q) {
    if (std::gcd(21LL, q) == 1) fs.push_back(frac(21, q));
  }
  fs.push_back(frac(-21, 5));
  fs.push_back(frac(21, -40));
  for (const auto& a : fs) {
    CHECK(normalize(normalize(a).fraction).fraction == normalize(a).fraction);
    CHECK(same_knot(a, a));
    for (const auto& b : fs) {
      CHECK(same_knot(a, b) == same_knot(b, a));
      for (const auto& c : fs) {
        if (same_knot(a, b) && same_knot(b, c)) CHECK(same_knot(a, c));
      }
    }
  }
}

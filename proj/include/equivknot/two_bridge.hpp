#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equivknot/error.hpp"

namespace equivknot {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction p/q naming a 2-bridge knot (p odd) or link (p even). Raw
// fractions keep the signs they were produced with; see normalize().
struct TwoBridgeFraction {
  BigInt p;
  BigInt q;

  bool is_knot() const { return p % 2 != 0; }
  bool is_unknot() const { return abs(p) == 1; }
  std::string to_string() const;
  // "P/Q" with optional leading minus signs.
  static TwoBridgeFraction parse(std::string_view text);

  friend bool operator==(const TwoBridgeFraction&, const TwoBridgeFraction&) = default;
};

struct NormalizedFraction {
  TwoBridgeFraction fraction;  // p > 0 and 0 < q < p, or 1/0 for the unknot
  bool mirrored = false;       // the input had p and q of opposite signs
};

// [a_1, ..., a_k] = a_1 - 1/(a_2 - 1/(... - 1/a_k)), evaluated right to left.
TwoBridgeFraction eval_continued_fraction(std::span<const BigInt> coeffs);
TwoBridgeFraction eval_continued_fraction(std::initializer_list<long long> coeffs);

NormalizedFraction normalize(const TwoBridgeFraction& f);

// Same p and q' = q^{+-1} mod p; without chirality also q' = -q^{+-1}.
bool same_knot(const TwoBridgeFraction& a, const TwoBridgeFraction& b, bool chirality_sensitive = false);

// k when f is equivalent (up to mirror) to (2k+1)/1, i.e. q = +-1 mod p.
std::optional<BigInt> is_torus_fraction(const TwoBridgeFraction& f);

// Integers r, s with gcd(r, s) = 1, 4rs = p_sign * p + unit and
// q_sign * q^{+-1} = 4 s^2 (mod p).
struct U4Witness {
  BigInt r;
  BigInt s;
  int p_sign = 1;           // sign in front of p in 4rs = +-p +-1
  int unit = 1;             // the trailing +-1
  int q_sign = 1;           // sign in front of q^{+-1}
  bool q_inverted = false;  // congruence uses q^{-1}

  std::string describe() const;
};

// One candidate examined by the witness search.
struct U4Candidate {
  BigInt n;  // +-p +-1
  BigInt r;
  BigInt s;
  bool coprime = false;
  BigInt residue;  // 4 s^2 mod p
  bool matched = false;
};

// Exhaustive search over N in {p+1, p-1, -p+1, -p-1}, divisors r of N/4 by
// increasing |r| (positive first), and the four congruences. Throws for the
// unknot (p = 1). Requires a knot fraction.
std::optional<U4Witness> u4_equals_one(const TwoBridgeFraction& f, std::vector<U4Candidate>* trace = nullptr);

// Re-checks the three conditions of a witness from scratch.
bool verify_u4_witness(const TwoBridgeFraction& f, const U4Witness& w);

// 7(14m+19) / (2(7m+10)), the fraction of [6, -1, 2m+1, -1, 6].
TwoBridgeFraction jm_fraction(const BigInt& m);

BigInt mod_floor(const BigInt& a, const BigInt& modulus);
BigInt mod_inverse(const BigInt& a, const BigInt& modulus);

}  // namespace equivknot

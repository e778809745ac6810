#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equivknot/two_bridge.hpp"

namespace equivknot {

// Names a knot whose invariants this library can evaluate:
//   unknot | T(p,q) | P/Q | Jq2(m) | A # B # ...
// Jq2(m) is the second quotient of J_m^+, the 2-bridge knot with fraction
// [6, -1, 2m+1, -1, 6]; the literal "Jq2(m)" leaves m free until instantiate().
struct KnotDescriptor {
  enum class Kind { Unknot, Torus, Fraction, JmQuotient, Sum };

  Kind kind = Kind::Unknot;
  int torus_p = 0;
  int torus_q = 0;
  TwoBridgeFraction fraction{1, 0};
  std::optional<long long> m;  // JmQuotient only; empty while symbolic
  std::vector<KnotDescriptor> summands;

  static KnotDescriptor parse(std::string_view text);
  std::string to_string() const;

  bool is_symbolic() const;
  KnotDescriptor instantiate(long long value) const;
  // A 2-bridge fraction for single-summand descriptors that have one.
  std::optional<TwoBridgeFraction> two_bridge() const;
  bool is_unknot() const;

  friend bool operator==(const KnotDescriptor&, const KnotDescriptor&) = default;
};

// |sigma|: 0 for the unknot, computed from the tridiagonal form for T(2, 2k+1)
// (including fractions equivalent to (2k+1)/1), |signature_q2_jm(m)| for
// Jq2(m), additive over #. Anything else throws "supply value explicitly".
long long signature_magnitude(const KnotDescriptor& d);

// Known unknotting number: 0 for the unknot, (p-1)(q-1)/2 for torus knots
// (assumed from the Milnor conjecture, not computed). Empty when unknown.
std::optional<long long> unknotting_number(const KnotDescriptor& d);

// Best lower bound on u available: the known value, else ceil(|sigma|/2).
long long unknotting_number_lower(const KnotDescriptor& d);

// Lower bound on u_4: 0 for the unknot; for 2-bridge knots 1 when a 4-move
// witness exists and 2 otherwise; 1 for other nontrivial knots.
long long u4_lower(const KnotDescriptor& d);

// True when d could be the quotient T(2, 2n+1) or unknot of a twist knot.
bool is_twist_knot_quotient(const KnotDescriptor& d);

}  // namespace equivknot

#include "equivknot/two_bridge.hpp"

#include <algorithm>
#include <sstream>

namespace equivknot {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  while (!digits.empty() && digits.front() == '-') {
    negative = !negative;
    digits.remove_prefix(1);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("invalid fraction '" + std::string(whole) + "'");
  }
  BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

std::vector<BigInt> divisors_by_size(const BigInt& n) {
  // Positive divisors of |n| in increasing order.
  const BigInt a = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::string TwoBridgeFraction::to_string() const { return p.str() + "/" + q.str(); }

TwoBridgeFraction TwoBridgeFraction::parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) throw ParseError("fraction '" + std::string(text) + "' must have the form P/Q");
  TwoBridgeFraction f{parse_integer(trimmed.substr(0, slash), text), parse_integer(trimmed.substr(slash + 1), text)};
  if (f.p == 0) throw ParseError("fraction '" + std::string(text) + "' has zero numerator");
  if (gcd(abs(f.p), abs(f.q)) != 1) throw ParseError("fraction '" + std::string(text) + "' is not reduced");
  return f;
}

BigInt mod_floor(const BigInt& a, const BigInt& modulus) {
  BigInt r = a % modulus;
  if (r < 0) r += modulus;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& modulus) {
  BigInt old_r = mod_floor(a, modulus), r = modulus;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    const BigInt quotient = old_r / r;
    BigInt tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(a.str() + " is not invertible modulo " + modulus.str());
  return mod_floor(old_s, modulus);
}

TwoBridgeFraction eval_continued_fraction(std::span<const BigInt> coeffs) {
  if (coeffs.empty()) throw Error("continued fraction needs at least one coefficient");
  // value of the suffix [a_k, ..., a_n] is num/den.
  BigInt num = coeffs.back();
  BigInt den = 1;
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    if (num == 0) {
      std::ostringstream suffix;
      suffix << '[';
      for (std::size_t t = k + 1; t < coeffs.size(); ++t) suffix << (t > k + 1 ? "," : "") << coeffs[t];
      suffix << ']';
      throw Error("continued fraction divides by zero: suffix " + suffix.str() + " evaluates to 0");
    }
    BigInt next = coeffs[k] * num - den;
    den = num;
    num = std::move(next);
  }
  return {num, den};
}

TwoBridgeFraction eval_continued_fraction(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return eval_continued_fraction(big);
}

NormalizedFraction normalize(const TwoBridgeFraction& f) {
  if (f.p == 0) throw Error("fraction with zero numerator");
  if (gcd(abs(f.p), abs(f.q)) != 1) throw Error("fraction " + f.to_string() + " is not reduced");
  NormalizedFraction out;
  out.mirrored = (f.p < 0) != (f.q < 0) && f.q != 0;
  const BigInt p = abs(f.p);
  if (p == 1) {
    out.fraction = {1, 0};
    return out;
  }
  const BigInt q = f.p < 0 ? BigInt(-f.q) : f.q;
  out.fraction = {p, mod_floor(q, p)};
  return out;
}

bool same_knot(const TwoBridgeFraction& a, const TwoBridgeFraction& b, bool chirality_sensitive) {
  const TwoBridgeFraction x = normalize(a).fraction;
  const TwoBridgeFraction y = normalize(b).fraction;
  if (x.p != y.p) return false;
  if (x.p == 1) return true;
  const BigInt& p = x.p;
  const BigInt q = x.q;
  const BigInt q_inv = mod_inverse(q, p);
  std::vector<BigInt> allowed{q, q_inv};
  if (!chirality_sensitive) {
    allowed.push_back(mod_floor(-q, p));
    allowed.push_back(mod_floor(-q_inv, p));
  }
  return std::find(allowed.begin(), allowed.end(), y.q) != allowed.end();
}

std::optional<BigInt> is_torus_fraction(const TwoBridgeFraction& f) {
  const TwoBridgeFraction x = normalize(f).fraction;
  if (x.p % 2 == 0) return std::nullopt;
  if (x.p == 1) return BigInt(0);
  if (x.q == 1 || x.q == x.p - 1) return BigInt((x.p - 1) / 2);
  return std::nullopt;
}

std::string U4Witness::describe() const {
  std::ostringstream out;
  out << "r=" << r << " s=" << s << ": 4rs = " << (p_sign > 0 ? "+" : "-") << "p" << (unit > 0 ? "+1" : "-1")
      << ", " << (q_sign > 0 ? "+" : "-") << (q_inverted ? "q^-1" : "q") << " = 4s^2 mod p";
  return out.str();
}

std::optional<U4Witness> u4_equals_one(const TwoBridgeFraction& f, std::vector<U4Candidate>* trace) {
  const TwoBridgeFraction x = normalize(f).fraction;
  if (x.p == 1) throw Error("already unknot; u4 = 0");
  if (!x.is_knot()) throw Error("fraction " + f.to_string() + " is a two-component link");
  const BigInt& p = x.p;
  const BigInt q = x.q;
  const BigInt q_inv = mod_inverse(q, p);
  struct Congruence {
    int sign;
    bool inverted;
    BigInt value;
  };
  const Congruence congruences[] = {{1, false, q},
                                    {-1, false, mod_floor(-q, p)},
                                    {1, true, q_inv},
                                    {-1, true, mod_floor(-q_inv, p)}};
  const std::pair<int, int> choices[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (const auto& [p_sign, unit] : choices) {
    const BigInt n = p_sign * p + unit;
    if (n % 4 != 0) continue;
    const BigInt quarter = n / 4;
    for (const BigInt& d : divisors_by_size(quarter)) {
      for (int sign : {1, -1}) {
        const BigInt r = sign * d;
        const BigInt s = quarter / r;
        U4Candidate candidate{n, r, s, gcd(abs(r), abs(s)) == 1, mod_floor(4 * s * s, p), false};
        std::optional<U4Witness> found;
        if (candidate.coprime) {
          for (const auto& c : congruences) {
            if (c.value == candidate.residue) {
              found = U4Witness{r, s, p_sign, unit, c.sign, c.inverted};
              break;
            }
          }
        }
        candidate.matched = found.has_value();
        if (trace) trace->push_back(candidate);
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

bool verify_u4_witness(const TwoBridgeFraction& f, const U4Witness& w) {
  const TwoBridgeFraction x = normalize(f).fraction;
  if (x.p <= 1) return false;
  if (w.r == 0 || w.s == 0 || gcd(abs(w.r), abs(w.s)) != 1) return false;
  if (4 * w.r * w.s != w.p_sign * x.p + w.unit) return false;
  if (std::abs(w.p_sign) != 1 || std::abs(w.unit) != 1 || std::abs(w.q_sign) != 1) return false;
  const BigInt base = w.q_inverted ? mod_inverse(x.q, x.p) : x.q;
  return mod_floor(w.q_sign * base - 4 * w.s * w.s, x.p) == 0;
}

TwoBridgeFraction jm_fraction(const BigInt& m) { return {7 * (14 * m + 19), 2 * (7 * m + 10)}; }

}  // namespace equivknot

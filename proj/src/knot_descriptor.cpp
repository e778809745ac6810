#include "equivknot/knot_descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "equivknot/signature.hpp"
#include "equivknot/torus.hpp"

namespace equivknot {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_ll(std::string_view s, std::string_view whole) {
  s = trim(s);
  long long value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ParseError("knot descriptor '" + std::string(whole) + "': '" + std::string(s) + "' is not an integer");
  }
  return value;
}

KnotDescriptor parse_single(std::string_view text, std::string_view whole) {
  KnotDescriptor d;
  if (text == "unknot") return d;
  auto inside = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.size() > prefix.size() + 1 && text.substr(0, prefix.size()) == prefix && text.back() == ')') {
      return text.substr(prefix.size(), text.size() - prefix.size() - 1);
    }
    return std::nullopt;
  };
  if (auto args = inside("T(")) {
    const auto comma = args->find(',');
    if (comma == std::string_view::npos) throw ParseError("knot descriptor '" + std::string(whole) + "': T(p,q) needs two parameters");
    d.kind = KnotDescriptor::Kind::Torus;
    const long long p = parse_ll(args->substr(0, comma), whole);
    const long long q = parse_ll(args->substr(comma + 1), whole);
    if (p < 2 || q < 2 || p > 1'000'000 || q > 1'000'000) {
      throw ParseError("knot descriptor '" + std::string(whole) + "': torus parameters must be at least 2");
    }
    if (std::gcd(p, q) != 1) {
      throw ParseError("knot descriptor '" + std::string(whole) + "': T(" + std::to_string(p) + "," +
                       std::to_string(q) + ") is a link, not a knot (gcd " + std::to_string(std::gcd(p, q)) + ")");
    }
    d.torus_p = static_cast<int>(p);
    d.torus_q = static_cast<int>(q);
    return d;
  }
  if (auto arg = inside("Jq2(")) {
    d.kind = KnotDescriptor::Kind::JmQuotient;
    if (trim(*arg) != "m") d.m = parse_ll(*arg, whole);
    return d;
  }
  if (text.find('/') != std::string_view::npos) {
    d.kind = KnotDescriptor::Kind::Fraction;
    d.fraction = TwoBridgeFraction::parse(text);
    if (!d.fraction.is_knot()) throw ParseError("knot descriptor '" + std::string(whole) + "': even numerator gives a link");
    return d;
  }
  throw ParseError("knot descriptor '" + std::string(whole) + "': unrecognized term '" + std::string(text) + "'");
}

bool is_two_strand_torus(const KnotDescriptor& d) { return d.kind == KnotDescriptor::Kind::Torus && d.torus_p == 2; }

}  // namespace

KnotDescriptor KnotDescriptor::parse(std::string_view text) {
  std::vector<KnotDescriptor> parts;
  std::string_view rest = text;
  while (true) {
    const auto hash = rest.find('#');
    const std::string_view term = trim(rest.substr(0, hash));
    if (term.empty()) throw ParseError("knot descriptor '" + std::string(text) + "' has an empty summand");
    parts.push_back(parse_single(term, text));
    if (hash == std::string_view::npos) break;
    rest.remove_prefix(hash + 1);
  }
  if (parts.size() == 1) return parts.front();
  KnotDescriptor sum;
  sum.kind = Kind::Sum;
  sum.summands = std::move(parts);
  return sum;
}

std::string KnotDescriptor::to_string() const {
  switch (kind) {
    case Kind::Unknot:
      return "unknot";
    case Kind::Torus:
      return "T(" + std::to_string(torus_p) + "," + std::to_string(torus_q) + ")";
    case Kind::Fraction:
      return fraction.to_string();
    case Kind::JmQuotient:
      return "Jq2(" + (m ? std::to_string(*m) : std::string("m")) + ")";
    case Kind::Sum: {
      std::string out;
      for (const auto& s : summands) out += (out.empty() ? "" : " # ") + s.to_string();
      return out;
    }
  }
  return {};
}

bool KnotDescriptor::is_symbolic() const {
  if (kind == Kind::JmQuotient) return !m.has_value();
  return std::any_of(summands.begin(), summands.end(), [](const auto& s) { return s.is_symbolic(); });
}

KnotDescriptor KnotDescriptor::instantiate(long long value) const {
  KnotDescriptor out = *this;
  if (kind == Kind::JmQuotient && !m) out.m = value;
  for (auto& s : out.summands) s = s.instantiate(value);
  return out;
}

std::optional<TwoBridgeFraction> KnotDescriptor::two_bridge() const {
  switch (kind) {
    case Kind::Unknot:
      return TwoBridgeFraction{1, 0};
    case Kind::Torus:
      if (torus_p == 2 || torus_q == 2) return TwoBridgeFraction{std::max(torus_p, torus_q), 1};
      return std::nullopt;
    case Kind::Fraction:
      return fraction;
    case Kind::JmQuotient:
      if (!m) throw Error("Jq2(m) needs a value for m");
      return jm_fraction(*m);
    case Kind::Sum:
      return std::nullopt;
  }
  return std::nullopt;
}

bool KnotDescriptor::is_unknot() const {
  if (kind == Kind::Sum) return std::all_of(summands.begin(), summands.end(), [](const auto& s) { return s.is_unknot(); });
  const auto f = two_bridge();
  return f && normalize(*f).fraction.is_unknot();
}

long long signature_magnitude(const KnotDescriptor& d) {
  using Kind = KnotDescriptor::Kind;
  switch (d.kind) {
    case Kind::Unknot:
      return 0;
    case Kind::Sum: {
      long long total = 0;
      for (const auto& s : d.summands) total += signature_magnitude(s);
      return total;
    }
    case Kind::JmQuotient:
      if (!d.m) throw Error("Jq2(m) needs a value for m");
      return std::abs(signature_q2_jm(*d.m));
    case Kind::Torus:
    case Kind::Fraction:
      if (d.kind == Kind::Torus && !is_two_strand_torus(d) && d.torus_q != 2) break;
      if (const auto k = is_torus_fraction(*d.two_bridge())) {
        return std::llabs(matrix_signature(torus_two_strand_form(static_cast<int>(*k))).signature());
      }
      break;
  }
  throw Error("signature of " + d.to_string() + " is not computed here; supply value explicitly");
}

std::optional<long long> unknotting_number(const KnotDescriptor& d) {
  using Kind = KnotDescriptor::Kind;
  if (d.is_unknot()) return 0;
  switch (d.kind) {
    case Kind::Torus:
      return static_cast<long long>(d.torus_p - 1) * (d.torus_q - 1) / 2;
    case Kind::Fraction:
      if (const auto k = is_torus_fraction(d.fraction)) return static_cast<long long>(*k);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

long long unknotting_number_lower(const KnotDescriptor& d) {
  if (const auto u = unknotting_number(d)) return *u;
  try {
    return unknotting_lower_bound(signature_magnitude(d));
  } catch (const Error&) {
    return d.is_unknot() ? 0 : 1;
  }
}

long long u4_lower(const KnotDescriptor& d) {
  if (d.is_unknot()) return 0;
  if (d.kind != KnotDescriptor::Kind::Sum) {
    if (const auto f = d.two_bridge()) return u4_equals_one(*f) ? 1 : 2;
  }
  return 1;
}

bool is_twist_knot_quotient(const KnotDescriptor& d) {
  if (d.is_unknot()) return true;
  if (d.kind == KnotDescriptor::Kind::Sum) {
    const auto nontrivial = std::count_if(d.summands.begin(), d.summands.end(), [](const auto& s) { return !s.is_unknot(); });
    if (nontrivial != 1) return false;
    return std::all_of(d.summands.begin(), d.summands.end(),
                       [](const auto& s) { return s.is_unknot() || is_twist_knot_quotient(s); });
  }
  const auto f = d.two_bridge();
  return f && is_torus_fraction(*f).has_value();
}

}  // namespace equivknot

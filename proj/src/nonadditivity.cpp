#include "equivknot/nonadditivity.hpp"

#include <sstream>

#include "equivknot/signature.hpp"

namespace equivknot {
namespace {

using nlohmann::json;

constexpr long long kEightLow = -5;
constexpr long long kEightHigh = 2;

const QuotientData& require_entry(const std::vector<QuotientData>& registry, std::string_view name) {
  const QuotientData* entry = find_entry(registry, name);
  if (!entry) throw Error("registry has no entry '" + std::string(name) + "'");
  return *entry;
}

const KnotDescriptor& require_q2(const QuotientData& entry) {
  if (!entry.q2) throw Error("registry entry '" + entry.name + "' has no second quotient");
  return *entry.q2;
}

}  // namespace

NonAdditivityReport nonadditivity_report(const NonAdditivityOptions& options,
                                         const std::vector<QuotientData>& registry) {
  if (options.m_min > options.m_max) throw Error("empty m range");
  NonAdditivityReport report;
  report.m_min = options.m_min;
  report.m_max = options.m_max;

  const QuotientData& sum = require_entry(registry, "K1#K2");
  const QuotientData& summand = require_entry(registry, "T_3");
  const QuotientData& j_minus = require_entry(registry, "J_m^-");
  const QuotientData& j_plus = require_entry(registry, "J_m^+");

  report.assumptions = {
      "u(T(2,2k+1)) = k and more generally u(T(p,q)) = (p-1)(q-1)/2 (Milnor conjecture, Kronheimer-Mrowka)",
      "only twist knots can be unknotted by a single type C move, and their quotients are T(2,2n+1) and the unknot",
      summand.name + " is unknotted by a single type C move: " + summand.provenance,
      sum.name + ": " + sum.provenance,
      j_minus.name + ": " + j_minus.provenance,
      j_plus.name + ": " + j_plus.provenance,
  };

  // (i) One type A move or two type B moves change q2(K1#K2) by at most four
  // crossing changes.
  {
    const KnotDescriptor& q2 = require_q2(sum);
    const long long sigma = signature_magnitude(q2);
    const long long u_lower = unknotting_lower_bound(sigma);
    SubCheck check{"i", "K1#K2 is not unknotted by one type A move or two type B moves",
                   "u(K) >= |sigma(K)|/2; a type A move changes each quotient by a crossing change, a type B move "
                   "applies a 4-move (at most two crossing changes) to one quotient",
                   u_lower > 4, ""};
    std::ostringstream detail;
    detail << "|sigma(" << q2.to_string() << ")| = " << sigma << ", so u(q2) >= " << u_lower << " > 4"
           << "; type A bound " << type_A_lower(unknotting_number_lower(sum.q1.value_or(KnotDescriptor{})), u_lower);
    check.detail = detail.str();
    report.checks.push_back(std::move(check));
  }

  // (ii) J_m^-: q2 unchanged.
  {
    const KnotDescriptor& q2 = require_q2(j_minus);
    const long long u_lower = unknotting_lower_bound(signature_magnitude(q2));
    const bool twist = is_twist_knot_quotient(q2);
    SubCheck check{"ii", "J_m^- is not unknotted by a single type B or type C move",
                   "a type B move applies one 4-move to one quotient; a single type C move unknots only twist knots",
                   u_lower > 2 && !twist, ""};
    check.detail = "q2 = " + q2.to_string() + " (" + j_minus.provenance + "); u(q2) >= " + std::to_string(u_lower) +
                   " > 2; q2 is " + (twist ? "" : "not ") + "a twist-knot quotient";
    report.checks.push_back(std::move(check));
  }

  // (iii) J_m^+ over the configured range.
  const KnotDescriptor q2_family = require_q2(j_plus);
  bool never_torus = true;
  bool in_range = true;
  bool small_inside_eight = true;
  std::vector<long long> torus_hits, range_misses;
  for (long long m = options.m_min; m <= options.m_max; ++m) {
    const KnotDescriptor q2 = q2_family.instantiate(m);
    const TwoBridgeFraction f = *q2.two_bridge();
    if (is_torus_fraction(f)) {
      never_torus = false;
      torus_hits.push_back(m);
    }
    const long long sigma = signature_q2_jm(m);
    if (sigma < -2 * m - 6 || sigma > -2 * m) {
      in_range = false;
      range_misses.push_back(m);
    }
    if (std::llabs(sigma) < 6) {
      report.observed_small_sigma.push_back(m);
      if (m < kEightLow || m > kEightHigh) small_inside_eight = false;
    }
  }
  bool eight_fail = false;
  for (long long m = kEightLow; m <= kEightHigh; ++m) {
    JmRow row{m, jm_fraction(m), signature_q2_jm(m), false, false};
    row.torus_fraction = is_torus_fraction(row.fraction).has_value();
    row.u4_one = u4_equals_one(row.fraction).has_value();
    eight_fail = eight_fail || row.u4_one;
    report.small_signature.push_back(std::move(row));
  }

  auto list = [](const std::vector<long long>& values) {
    std::string out;
    for (long long v : values) out += (out.empty() ? "" : ", ") + std::to_string(v);
    return out.empty() ? std::string("none") : out;
  };
  const std::string range = "m in [" + std::to_string(options.m_min) + ", " + std::to_string(options.m_max) + "]";
  report.checks.push_back({"iii.a", "q2(J_m^+) is never a torus knot, so J_m^+ is not a twist knot",
                           "2-bridge classification: p/q is T(2,2k+1) iff q = +-1 or q^-1 = +-1 mod p", never_torus,
                           range + "; torus fractions found: " + list(torus_hits)});
  report.checks.push_back({"iii.b", "sigma(q2(J_m^+)) lies in [-2m-6, -2m]",
                           "sigma(q2(J_m^+)) = sigma(G) - (2m+3) with G a 3x3 Goeritz matrix", in_range,
                           range + "; violations: " + list(range_misses)});
  report.checks.push_back(
      {"iii.c", "|sigma(q2(J_m^+))| < 6 only when -6 < m < 3; otherwise u(q2) > 2 rules out one type A or B move",
       "u(K) >= |sigma(K)|/2", small_inside_eight,
       range + "; |sigma| < 6 exactly for m in {" + list(report.observed_small_sigma) + "}"});
  std::string fractions;
  for (const auto& row : report.small_signature) fractions += (fractions.empty() ? "" : ", ") + row.fraction.to_string();
  report.checks.push_back({"iii.d", "none of the eight knots q2(J_m^+), -6 < m < 3, has u4 = 1",
                           "4-move criterion: u4(p/q) = 1 iff 4rs = +-p +-1 and +-q^{+-1} = 4s^2 mod p with gcd(r,s) = 1",
                           !eight_fail, "fractions " + fractions});

  report.passed = true;
  for (const auto& check : report.checks) report.passed = report.passed && check.passed;
  const auto u_summand = summand.supplied_value("u_tilde");
  if (!u_summand) throw Error("registry entry '" + summand.name + "' does not supply u_tilde");
  const long long rhs = 2 * *u_summand;
  report.conclusion = report.passed ? "u~(K1#K2) >= 3 > " + std::to_string(rhs) + " = u~(K1) + u~(K2)"
                                    : "FAILED: the lower bound u~(K1#K2) >= 3 is not established";
  return report;
}

std::string NonAdditivityReport::to_text() const {
  std::ostringstream out;
  out << "non-additivity report for K1 = K2 = T_3, m in [" << m_min << ", " << m_max << "]\n";
  for (const auto& check : checks) {
    out << "  [" << (check.passed ? "PASS" : "FAIL") << "] (" << check.id << ") " << check.claim << "\n"
        << "         by: " << check.citation << "\n"
        << "         " << check.detail << "\n";
  }
  out << "  fractions for -6 < m < 3:\n";
  for (const auto& row : small_signature) {
    out << "    m = " << row.m << ": " << row.fraction.to_string() << "  sigma = " << row.signature
        << "  u4 = 1: " << (row.u4_one ? "yes" : "no") << "\n";
  }
  out << "  assumptions:\n";
  for (const auto& a : assumptions) out << "    - " << a << "\n";
  out << (passed ? "PASS: " : "FAIL: ") << conclusion << "\n";
  return out.str();
}

json NonAdditivityReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back(
        {{"id", c.id}, {"claim", c.claim}, {"citation", c.citation}, {"passed", c.passed}, {"detail", c.detail}});
  }
  json rows = json::array();
  for (const auto& r : small_signature) {
    rows.push_back({{"m", r.m},
                    {"fraction", r.fraction.to_string()},
                    {"signature", r.signature},
                    {"torus_fraction", r.torus_fraction},
                    {"u4_one", r.u4_one}});
  }
  return json{{"m_range", {m_min, m_max}},  {"checks", checks_json},     {"small_signature", rows},
              {"observed_small_sigma", observed_small_sigma}, {"assumptions", assumptions}, {"passed", passed},
              {"conclusion", conclusion}};
}

NonAdditivityReport NonAdditivityReport::from_json(const json& doc) {
  try {
    NonAdditivityReport r;
    r.m_min = doc.at("m_range").at(0).get<long long>();
    r.m_max = doc.at("m_range").at(1).get<long long>();
    for (const auto& c : doc.at("checks")) {
      r.checks.push_back({c.at("id").get<std::string>(), c.at("claim").get<std::string>(),
                          c.at("citation").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
    }
    for (const auto& row : doc.at("small_signature")) {
      r.small_signature.push_back({row.at("m").get<long long>(),
                                   TwoBridgeFraction::parse(row.at("fraction").get<std::string>()),
                                   row.at("signature").get<long long>(), row.at("torus_fraction").get<bool>(),
                                   row.at("u4_one").get<bool>()});
    }
    r.observed_small_sigma = doc.at("observed_small_sigma").get<std::vector<long long>>();
    r.assumptions = doc.at("assumptions").get<std::vector<std::string>>();
    r.passed = doc.at("passed").get<bool>();
    r.conclusion = doc.at("conclusion").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace equivknot

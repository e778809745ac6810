#include "equivknot/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "equivknot/canonical_form.hpp"
#include "equivknot/move_log_json.hpp"
#include "equivknot/nonadditivity.hpp"
#include "equivknot/registry.hpp"
#include "equivknot/signature.hpp"
#include "equivknot/torus.hpp"
#include "equivknot/two_bridge.hpp"
#include "equivknot/unknotter.hpp"

namespace equivknot::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

// Options whose values may begin with '-' ("-357/-50", "-5..2", "-1,2").
const std::set<std::string> kValueOptions{"--fraction", "--m-range", "--coeffs", "--word", "--m"};

std::vector<std::string> join_negative_values(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (kValueOptions.count(arg) && k + 1 < argc) {
      args.push_back(arg + "=" + argv[++k]);
    } else {
      args.push_back(arg);
    }
  }
  return args;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range '" + text + "' must have the form A..B");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const long long lo = std::stoll(a, &used_a), hi = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
    if (lo > hi) throw ParseError("range '" + text + "' is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("range '" + text + "' must have the form A..B with integers A <= B");
  }
}

std::vector<BigInt> parse_coeffs(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    item = item.substr(first, last - first + 1);
    const bool negative = item.front() == '-';
    const std::string digits = negative ? item.substr(1) : item;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("coefficient '" + item + "' is not an integer");
    }
    BigInt value(digits);
    out.push_back(negative ? BigInt(-value) : value);
  }
  if (out.empty()) throw ParseError("no coefficients given");
  return out;
}

std::string fraction_line(const TwoBridgeFraction& f) {
  const NormalizedFraction n = normalize(f);
  std::string line = f.to_string() + " (normalized " + n.fraction.to_string();
  if (n.mirrored) line += ", mirrored";
  return line + ")";
}

json fraction_json(const TwoBridgeFraction& f) {
  const NormalizedFraction n = normalize(f);
  return {{"fraction", f.to_string()}, {"normalized", n.fraction.to_string()}, {"mirrored", n.mirrored}};
}

json witness_json(const U4Witness& w) {
  return {{"r", w.r.str()},
          {"s", w.s.str()},
          {"p_sign", w.p_sign},
          {"unit", w.unit},
          {"q_sign", w.q_sign},
          {"q_inverted", w.q_inverted}};
}

// Shared state of one invocation.
struct Context {
  std::ostream& out;
  bool json_output = false;

  void emit(const json& doc) { out << doc.dump(2) << '\n'; }
};

int unknot_and_report(Context& ctx, const IntravergentBraid& braid, const std::string& label,
                      std::optional<int> expected_cost, const std::string& log_path, bool verify) {
  UnknotStats stats;
  const MoveLog log = equivariant_unknot(braid, {}, &stats);
  if (!log_path.empty()) write_move_log(log, log_path);
  std::optional<VerificationReport> report;
  if (verify) report = verify_move_log(log);
  const bool cost_ok = !expected_cost || *expected_cost == log.total_cost;
  const bool ok = cost_ok && (!report || report->passed);
  if (ctx.json_output) {
    json doc{{"knot", label},
             {"strands", braid.strands()},
             {"length", braid.length()},
             {"total_cost", log.total_cost},
             {"steps", log.steps.size()},
             {"type_a", log.count(MoveKind::TypeA)},
             {"type_b", log.count(MoveKind::TypeB)},
             {"fallback_searches", stats.fallback_searches}};
    if (expected_cost) doc["expected_cost"] = *expected_cost;
    if (report) doc["verified"] = {{"passed", report->passed}, {"message", report->message}};
    if (!log_path.empty()) doc["log"] = log_path;
    ctx.emit(doc);
  } else {
    ctx.out << label << ": " << braid.strands() << " strands, length " << braid.length() << "\n"
            << "cost " << log.total_cost << " (" << log.count(MoveKind::TypeA) << " type A, "
            << log.count(MoveKind::TypeB) << " type B) in " << log.steps.size() << " steps\n";
    if (expected_cost) {
      ctx.out << "expected cost " << *expected_cost << (cost_ok ? "" : "  MISMATCH") << "\n";
    }
    if (report) ctx.out << "log verification: " << (report->passed ? "passed" : "FAILED: " + report->message) << "\n";
    if (!log_path.empty()) ctx.out << "log written to " << log_path << "\n";
  }
  return ok ? kOk : kDomainFailure;
}

std::vector<QuotientData> registry_from(const std::string& path) {
  return path.empty() ? default_registry() : load_registry(path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant unknotting of strongly invertible knots"};
  app.name("equivknot");
  app.require_subcommand(1);
  Context ctx{out};
  app.add_flag("--json", ctx.json_output, "Machine-readable JSON output");

  int p = 0, q = 0, strands = 0;
  std::string emit_log, word, log_path, fraction, coeffs, m_range, matrix_path, knot, registry_path;
  bool verify = false, cheap = false;
  std::optional<long long> m_value;

  auto* torus = app.add_subcommand("torus-unknot", "Equivariantly unknot the torus knot T(p,q)");
  torus->add_option("--p", p, "First parameter")->required();
  torus->add_option("--q", q, "Second parameter")->required();
  torus->add_option("--emit-log", emit_log, "Write the move log as JSON");
  torus->add_flag("--verify", verify, "Replay and check the log");

  auto* braid = app.add_subcommand("unknot-braid", "Equivariantly unknot a positive intravergent braid");
  braid->add_option("--strands", strands, "Number of strands (odd)")->required();
  braid->add_option("--word", word, "Signed generator indices, e.g. \"1 2 3 2\"")->required();
  braid->add_option("--emit-log", emit_log, "Write the move log as JSON");
  braid->add_flag("--verify", verify, "Replay and check the log");

  auto* check = app.add_subcommand("check-intravergent", "Check the rotation symmetry of a braid word");
  check->add_option("--strands", strands, "Number of strands")->required();
  check->add_option("--word", word, "Signed generator indices")->required();

  auto* verify_cmd = app.add_subcommand("verify-log", "Replay a JSON move log");
  verify_cmd->add_option("--log", log_path, "Move log file")->required();
  verify_cmd->add_flag("--cheap", cheap, "Check isotopies by exponent sum and permutation only");

  auto* u4 = app.add_subcommand("u4-one", "Decide whether a 2-bridge knot has u4 = 1");
  u4->add_option("--fraction", fraction, "P/Q")->required();

  auto* cf = app.add_subcommand("cont-frac", "Evaluate [a1, ..., ak] = a1 - 1/(a2 - ...)");
  cf->add_option("--coeffs", coeffs, "Comma-separated integers")->required();

  auto* jm = app.add_subcommand("jm", "Fractions of the quotients q2(J_m^+)");
  jm->add_option("--m-range", m_range, "A..B")->required();

  auto* sig = app.add_subcommand("signature", "Inertia of a symmetric integer matrix");
  sig->add_option("--matrix", matrix_path, "Matrix file: n, then n rows")->required();

  auto* bounds = app.add_subcommand("bounds", "Lower bounds from the quotient knots of a registry entry");
  bounds->add_option("--knot", knot, "Registry entry name")->required();
  bounds->add_option("--m", m_value, "Value of the family parameter");
  bounds->add_option("--registry", registry_path, "Registry JSON (default: built-in)");

  auto* report = app.add_subcommand("nonadditivity-report", "Run the non-additivity argument");
  report->add_option("--m-range", m_range, "A..B (default -100..100)");
  report->add_option("--registry", registry_path, "Registry JSON (default: built-in)");

  std::vector<std::string> args = join_negative_values(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*torus) {
      const TorusParameters t = normalize_torus(p, q);
      const std::string label = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
      return unknot_and_report(ctx, torus_braid(p, q), label, torus_equivariant_unknotting_number(t.strands, t.twists),
                               emit_log, verify);
    }
    if (*braid) {
      const IntravergentBraid b(BraidWord::parse(strands, word));
      const long long expected = (static_cast<long long>(b.length()) - b.strands() + 1) / 2;
      return unknot_and_report(ctx, b, "braid", static_cast<int>(expected), emit_log, verify);
    }
    if (*check) {
      const BraidWord w = BraidWord::parse(strands, word);
      const bool ok = validate_intravergent(w);
      const int components = closure_components(w);
      if (ctx.json_output) {
        ctx.emit({{"intravergent", ok}, {"closure_components", components}, {"positive", w.is_positive()}});
      } else {
        out << (ok ? "intravergent" : "not intravergent") << "; closure has " << components << " component"
            << (components == 1 ? "" : "s") << (w.is_positive() ? "; positive" : "") << "\n";
      }
      return ok ? kOk : kDomainFailure;
    }
    if (*verify_cmd) {
      const MoveLog log = read_move_log(log_path);
      const VerificationReport r = verify_move_log(log, cheap ? IsotopyCheck::Cheap : IsotopyCheck::Full);
      if (ctx.json_output) {
        json doc{{"passed", r.passed}, {"message", r.message}, {"steps_checked", r.steps_checked},
                 {"replayed_cost", r.replayed_cost}};
        doc["failing_step"] = r.failing_step ? json(*r.failing_step) : json(nullptr);
        ctx.emit(doc);
      } else {
        out << (r.passed ? "log verified: " : "log rejected: ") << r.message << " (" << r.steps_checked
            << " steps, cost " << r.replayed_cost << ")\n";
      }
      return r.passed ? kOk : kDomainFailure;
    }
    if (*u4) {
      const TwoBridgeFraction f = TwoBridgeFraction::parse(fraction);
      const auto w = u4_equals_one(f);
      if (ctx.json_output) {
        json doc = fraction_json(f);
        doc["u4_one"] = w.has_value();
        doc["witness"] = w ? witness_json(*w) : json(nullptr);
        ctx.emit(doc);
      } else if (w) {
        out << "u4 = 1: " << w->describe() << "\n";
      } else {
        out << "u4 ≠ 1\n";
      }
      return kOk;
    }
    if (*cf) {
      const TwoBridgeFraction f = eval_continued_fraction(parse_coeffs(coeffs));
      if (ctx.json_output) {
        ctx.emit(fraction_json(f));
      } else {
        out << fraction_line(f) << "\n";
      }
      return kOk;
    }
    if (*jm) {
      const auto [lo, hi] = parse_range(m_range);
      json rows = json::array();
      for (long long m = lo; m <= hi; ++m) {
        const TwoBridgeFraction f = jm_fraction(m);
        const long long sigma = signature_q2_jm(m);
        const bool torus_like = is_torus_fraction(f).has_value();
        const bool u4_one = u4_equals_one(f).has_value();
        if (ctx.json_output) {
          json row = fraction_json(f);
          row["m"] = m;
          row["signature"] = sigma;
          row["torus_fraction"] = torus_like;
          row["u4_one"] = u4_one;
          rows.push_back(std::move(row));
        } else {
          out << "m = " << m << ": " << fraction_line(f) << "  sigma = " << sigma
              << "  torus: " << (torus_like ? "yes" : "no") << "  u4 = 1: " << (u4_one ? "yes" : "no") << "\n";
        }
      }
      if (ctx.json_output) ctx.emit(rows);
      return kOk;
    }
    if (*sig) {
      const Inertia inertia = matrix_signature(read_matrix_file(matrix_path));
      if (ctx.json_output) {
        ctx.emit({{"n_plus", inertia.n_plus},
                  {"n_minus", inertia.n_minus},
                  {"n_zero", inertia.n_zero},
                  {"signature", inertia.signature()}});
      } else {
        out << "inertia (+" << inertia.n_plus << ", -" << inertia.n_minus << ", 0:" << inertia.n_zero
            << "), signature " << inertia.signature() << "\n";
      }
      return kOk;
    }
    if (*bounds) {
      const auto registry = registry_from(registry_path);
      const QuotientData* found = find_entry(registry, knot);
      if (!found) throw ParseError("no registry entry named '" + knot + "'");
      QuotientData entry = *found;
      if (entry.parameter) {
        if (!m_value) throw ParseError("entry '" + knot + "' needs --m");
        entry = entry.instantiate(*m_value);
      }
      auto value = [&](const std::string& key, const std::optional<KnotDescriptor>& d,
                       long long (*compute)(const KnotDescriptor&)) -> std::optional<long long> {
        if (auto v = entry.supplied_value(key)) return v;
        if (!d) return std::nullopt;
        return compute(*d);
      };
      const auto u1 = value("u_q1", entry.q1, unknotting_number_lower);
      const auto u2 = value("u_q2", entry.q2, unknotting_number_lower);
      const auto b1 = value("u4_q1", entry.q1, u4_lower);
      const auto b2 = value("u4_q2", entry.q2, u4_lower);
      const auto c1 = entry.supplied_value("unb_q1");
      const auto c2 = entry.supplied_value("unb_q2");
      std::optional<long long> type_a, type_b, type_c;
      if (u1 || u2) type_a = type_A_lower(u1.value_or(0), u2.value_or(0));
      if (b1 && b2) type_b = type_B_lower(*b1, *b2);
      if (c1 && c2) type_c = type_C_lower(*c1, *c2);
      auto opt = [](const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); };
      auto describe = [](const std::optional<KnotDescriptor>& d) { return d ? d->to_string() : std::string("unknown"); };
      if (ctx.json_output) {
        ctx.emit({{"knot", entry.name},
                  {"q1", describe(entry.q1)},
                  {"q2", describe(entry.q2)},
                  {"provenance", entry.provenance},
                  {"type_a_lower", opt(type_a)},
                  {"type_b_lower", opt(type_b)},
                  {"type_c_lower", opt(type_c)}});
      } else {
        auto show = [](const std::optional<long long>& v) {
          return v ? std::to_string(*v) : std::string("not available (supply value)");
        };
        out << entry.name << ": q1 = " << describe(entry.q1) << ", q2 = " << describe(entry.q2) << "\n"
            << "  source: " << entry.provenance << "\n"
            << "  type A lower bound: " << show(type_a) << "\n"
            << "  type B lower bound: " << show(type_b) << "\n"
            << "  type C lower bound: " << show(type_c) << "\n";
      }
      return kOk;
    }
    if (*report) {
      NonAdditivityOptions options;
      if (!m_range.empty()) std::tie(options.m_min, options.m_max) = parse_range(m_range);
      const NonAdditivityReport r = nonadditivity_report(options, registry_from(registry_path));
      if (ctx.json_output) {
        ctx.emit(r.to_json());
      } else {
        out << r.to_text();
      }
      return r.passed ? kOk : kDomainFailure;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace equivknot::cli

#include "equivknot/move_log_json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace equivknot {
namespace {

using nlohmann::json;

MoveKind parse_kind(const std::string& text) {
  for (MoveKind kind : {MoveKind::Commutation, MoveKind::BraidRelation, MoveKind::Destabilization, MoveKind::TypeA,
                        MoveKind::TypeB}) {
    if (to_string(kind) == text) return kind;
  }
  throw ParseError("steps[].kind: unknown move kind '" + text + "'");
}

TypeBPattern parse_pattern(const std::string& text) {
  if (text == to_string(TypeBPattern::Descending)) return TypeBPattern::Descending;
  if (text == to_string(TypeBPattern::Ascending)) return TypeBPattern::Ascending;
  throw ParseError("steps[].variant: unknown type B pattern '" + text + "'");
}

const json& require(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return object.at(key);
}

}  // namespace

json move_log_to_json(const MoveLog& log) {
  json word = json::array();
  for (const Generator& g : log.initial.word().letters()) word.push_back(g.index * g.exponent());
  json steps = json::array();
  for (const EquivariantMove& move : log.steps) {
    json step{{"kind", to_string(move.kind)}, {"positions", move.positions}};
    step["variant"] = move.kind == MoveKind::TypeB ? json(to_string(move.pattern)) : json(nullptr);
    steps.push_back(std::move(step));
  }
  return json{{"schema", kMoveLogSchema},
              {"initial", {{"strands", log.initial.strands()}, {"word", std::move(word)}}},
              {"steps", std::move(steps)},
              {"total_cost", log.total_cost}};
}

MoveLog move_log_from_json(const json& doc) {
  try {
    const json& schema = require(doc, "schema", "log");
    if (schema != kMoveLogSchema) {
      throw ParseError("schema: expected '" + std::string(kMoveLogSchema) + "', got " + schema.dump());
    }
    const json& initial = require(doc, "initial", "log");
    const int strands = require(initial, "strands", "initial").get<int>();
    std::vector<Generator> letters;
    for (const json& letter : require(initial, "word", "initial")) {
      const int value = letter.get<int>();
      if (value == 0) throw ParseError("initial.word: generator index 0");
      letters.push_back({std::abs(value), value > 0});
    }
    MoveLog log{IntravergentBraid(BraidWord(strands, std::move(letters))), {}, 0};
    const json& steps = require(doc, "steps", "log");
    if (!steps.is_array()) throw ParseError("steps: expected an array");
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const std::string where = "steps[" + std::to_string(k) + "]";
      EquivariantMove move;
      move.kind = parse_kind(require(steps[k], "kind", where).get<std::string>());
      move.positions = require(steps[k], "positions", where).get<std::vector<std::size_t>>();
      if (move.kind == MoveKind::TypeB) move.pattern = parse_pattern(require(steps[k], "variant", where).get<std::string>());
      log.steps.push_back(std::move(move));
    }
    log.total_cost = require(doc, "total_cost", "log").get<int>();
    return log;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed move log: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid move log: ") + e.what());
  }
}

void write_move_log(const MoveLog& log, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << move_log_to_json(log).dump(2) << '\n';
}

MoveLog read_move_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return move_log_from_json(doc);
}

}  // namespace equivknot

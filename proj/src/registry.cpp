#include "equivknot/registry.hpp"

#include <fstream>
#include <iterator>
#include <json.hpp>
#include <set>
#include <sstream>

namespace equivknot {
namespace {

using nlohmann::json;

constexpr std::string_view kDefaultRegistry =
#include "default_registry.inc"
    ;

// Forward iterator over the text that counts the newlines it steps past, so
// that the parser callback knows the current line.
class LineCountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineCountingIterator() = default;
  LineCountingIterator(const char* pos, std::size_t* line) : pos_(pos), line_(line) {}

  reference operator*() const { return *pos_; }
  LineCountingIterator& operator++() {
    if (*pos_ == '\n') ++*line_;
    ++pos_;
    return *this;
  }
  LineCountingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.pos_ == b.pos_; }

 private:
  const char* pos_ = nullptr;
  std::size_t* line_ = nullptr;
};

// Lines of the keys seen while parsing: top-level keys, and keys of each
// entry of "knots" (nested keys as "supplied.u").
struct KeyLines {
  std::map<std::string, std::size_t> top;
  std::vector<std::map<std::string, std::size_t>> entries;
  std::vector<std::size_t> entry_start;
};

const std::set<std::string> kEntryFields{"name", "q1", "q2", "provenance", "parameter", "supplied"};

}  // namespace

RegistryError::RegistryError(const std::string& source, std::size_t line, const std::string& field,
                             const std::string& what)
    : ParseError(source + ":" + std::to_string(line) + ": " + field + ": " + what), field_(field), line_(line) {}

std::optional<long long> QuotientData::supplied_value(const std::string& key) const {
  const auto it = supplied.find(key);
  if (it == supplied.end()) return std::nullopt;
  return it->second;
}

QuotientData QuotientData::instantiate(long long value) const {
  QuotientData out = *this;
  if (out.q1) out.q1 = out.q1->instantiate(value);
  if (out.q2) out.q2 = out.q2->instantiate(value);
  if (out.parameter) {
    out.name += " (" + *out.parameter + " = " + std::to_string(value) + ")";
    out.parameter.reset();
  }
  return out;
}

std::vector<QuotientData> parse_registry(std::string_view text, const std::string& source) {
  std::size_t line = 1;
  KeyLines lines;
  std::string current_object_key;  // key of the nested object inside an entry
  auto callback = [&](int depth, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::key) {
      const std::string key = parsed.get<std::string>();
      if (depth == 1) lines.top[key] = line;
      if (depth == 3 && !lines.entries.empty()) {
        lines.entries.back()[key] = line;
        current_object_key = key;
      }
      if (depth == 4 && !lines.entries.empty()) lines.entries.back()[current_object_key + "." + key] = line;
    } else if (event == json::parse_event_t::object_start && depth == 2) {
      lines.entries.emplace_back();
      lines.entry_start.push_back(line);
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(LineCountingIterator(text.data(), &line), LineCountingIterator(text.data() + text.size(), &line),
                      callback);
  } catch (const json::parse_error& e) {
    throw RegistryError(source, line, "<document>", std::string("invalid JSON: ") + e.what());
  }

  auto top_line = [&](const std::string& key) { return lines.top.count(key) ? lines.top[key] : 1; };
  if (!doc.is_object()) throw RegistryError(source, 1, "<document>", "expected a JSON object");
  if (!doc.contains("schema") || doc["schema"] != kRegistrySchema) {
    throw RegistryError(source, top_line("schema"), "schema", std::string("expected \"") + kRegistrySchema + "\"");
  }
  if (!doc.contains("knots") || !doc["knots"].is_array()) {
    throw RegistryError(source, top_line("knots"), "knots", "expected an array of entries");
  }

  std::vector<QuotientData> out;
  std::set<std::string> names;
  const json& knots = doc["knots"];
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const std::string prefix = "knots[" + std::to_string(k) + "]";
    const std::size_t entry_line = k < lines.entry_start.size() ? lines.entry_start[k] : top_line("knots");
    auto line_of = [&](const std::string& key) {
      if (k < lines.entries.size()) {
        const auto it = lines.entries[k].find(key);
        if (it != lines.entries[k].end()) return it->second;
      }
      return entry_line;
    };
    auto fail = [&](const std::string& key, const std::string& what) -> RegistryError {
      return RegistryError(source, line_of(key), prefix + (key.empty() ? "" : "." + key), what);
    };

    const json& entry = knots[k];
    if (!entry.is_object()) throw fail("", "expected an object");
    for (const auto& [key, value] : entry.items()) {
      if (!kEntryFields.count(key)) throw fail(key, "unknown field");
    }
    QuotientData data;
    if (!entry.contains("name") || !entry["name"].is_string() || entry["name"].get<std::string>().empty()) {
      throw fail("name", "required non-empty string");
    }
    data.name = entry["name"].get<std::string>();
    if (!names.insert(data.name).second) throw fail("name", "duplicate entry '" + data.name + "'");
    if (!entry.contains("provenance") || !entry["provenance"].is_string() ||
        entry["provenance"].get<std::string>().empty()) {
      throw fail("provenance", "required non-empty string");
    }
    data.provenance = entry["provenance"].get<std::string>();
    if (entry.contains("parameter")) {
      if (!entry["parameter"].is_string()) throw fail("parameter", "expected a string");
      data.parameter = entry["parameter"].get<std::string>();
    }
    for (const char* key : {"q1", "q2"}) {
      if (!entry.contains(key)) throw fail(key, "required (use null when unknown)");
      const json& value = entry[key];
      if (value.is_null()) continue;
      if (!value.is_string()) throw fail(key, "expected a knot descriptor string or null");
      try {
        KnotDescriptor d = KnotDescriptor::parse(value.get<std::string>());
        if (d.is_symbolic() && !data.parameter) throw Error("uses m but the entry declares no parameter");
        (std::string(key) == "q1" ? data.q1 : data.q2) = std::move(d);
      } catch (const Error& e) {
        throw fail(key, e.what());
      }
    }
    if (entry.contains("supplied")) {
      const json& supplied = entry["supplied"];
      if (!supplied.is_object()) throw fail("supplied", "expected an object of integers");
      for (const auto& [key, value] : supplied.items()) {
        if (!value.is_number_integer() || value.get<long long>() < 0) {
          throw fail("supplied." + key, "expected a nonnegative integer");
        }
        data.supplied[key] = value.get<long long>();
      }
    }
    out.push_back(std::move(data));
  }
  return out;
}

std::vector<QuotientData> load_registry(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read registry " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_registry(buffer.str(), path.string());
}

std::string_view default_registry_text() { return kDefaultRegistry; }

const std::vector<QuotientData>& default_registry() {
  static const std::vector<QuotientData> registry = parse_registry(kDefaultRegistry, "<default registry>");
  return registry;
}

const QuotientData* find_entry(const std::vector<QuotientData>& registry, std::string_view name) {
  for (const auto& entry : registry) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace equivknot

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equivknot/knot_descriptor.hpp"

namespace equivknot {

inline constexpr const char* kRegistrySchema = "equivknot-registry/1";

// A strongly invertible knot known only through its two quotient knots.
// Quotients left null in the file are unknown. `supplied` holds values the
// library cannot compute (u, u_tilde, u_nb of a quotient, ...), keyed by name.
struct QuotientData {
  std::string name;
  std::optional<KnotDescriptor> q1;
  std::optional<KnotDescriptor> q2;
  std::string provenance;
  std::optional<std::string> parameter;  // free parameter of a family, e.g. "m"
  std::map<std::string, long long> supplied;

  std::optional<long long> supplied_value(const std::string& key) const;
  QuotientData instantiate(long long value) const;
};

// Schema violations carry the offending field path and its 1-based line.
class RegistryError : public ParseError {
 public:
  RegistryError(const std::string& source, std::size_t line, const std::string& field, const std::string& what);
  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

std::vector<QuotientData> parse_registry(std::string_view text, const std::string& source = "<registry>");
std::vector<QuotientData> load_registry(const std::filesystem::path& path);
// The registry compiled into the library.
const std::vector<QuotientData>& default_registry();
std::string_view default_registry_text();

const QuotientData* find_entry(const std::vector<QuotientData>& registry, std::string_view name);

}  // namespace equivknot

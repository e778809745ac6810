#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "equivknot/registry.hpp"
#include "equivknot/two_bridge.hpp"

namespace equivknot {

struct SubCheck {
  std::string id;
  std::string claim;
  std::string citation;  // the statement the check instantiates
  bool passed = false;
  std::string detail;

  friend bool operator==(const SubCheck&, const SubCheck&) = default;
};

struct JmRow {
  long long m = 0;
  TwoBridgeFraction fraction;
  long long signature = 0;
  bool torus_fraction = false;
  bool u4_one = false;  // only evaluated when |signature| < 6 or m in the listed eight

  friend bool operator==(const JmRow&, const JmRow&) = default;
};

struct NonAdditivityReport {
  long long m_min = -100;
  long long m_max = 100;
  std::vector<SubCheck> checks;
  std::vector<JmRow> small_signature;          // the eight m in (-6, 3), in order
  std::vector<long long> observed_small_sigma;  // m in range with |sigma| < 6
  std::vector<std::string> assumptions;
  bool passed = false;
  std::string conclusion;

  std::string to_text() const;
  nlohmann::json to_json() const;
  static NonAdditivityReport from_json(const nlohmann::json& doc);

  friend bool operator==(const NonAdditivityReport&, const NonAdditivityReport&) = default;
};

struct NonAdditivityOptions {
  long long m_min = -100;
  long long m_max = 100;
};

NonAdditivityReport nonadditivity_report(const NonAdditivityOptions& options = {},
                                         const std::vector<QuotientData>& registry = default_registry());

}  // namespace equivknot

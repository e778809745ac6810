#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

#include "equivknot/unknotter.hpp"

namespace equivknot {

inline constexpr const char* kMoveLogSchema = "equivknot-movelog/1";

nlohmann::json move_log_to_json(const MoveLog& log);
// Throws ParseError naming the offending field.
MoveLog move_log_from_json(const nlohmann::json& doc);

void write_move_log(const MoveLog& log, const std::filesystem::path& path);
MoveLog read_move_log(const std::filesystem::path& path);

}  // namespace equivknot

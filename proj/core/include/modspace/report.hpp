#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "modspace/experiments.hpp"
#include "modspace/oracle.hpp"
#include "modspace/partitions.hpp"

namespace modspace {

/// Version stamped into every JSON document; bump on incompatible changes.
inline constexpr const char* kReportSchemaVersion = "1.0";

nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const GridSpec& grid);
nlohmann::json to_json(const ExperimentReport& report);
nlohmann::json to_json(const TailReport& report);
nlohmann::json to_json(const NecessityReport& report);

/// Columns: level,source_norm,target_norm,ratio,log2_ratio.
std::string to_csv(const ExperimentReport& report);

/// Columns: x,y,holds,clause,critical_s,strict,piece.
std::string to_csv(const std::vector<RegionCell>& cells);

}  // namespace modspace

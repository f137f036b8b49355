#include "modspace/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace modspace {

namespace {

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"holds", v.holds},
                      {"clause", v.clause},
                      {"critical_s", to_string(v.critical_s)},
                      {"strict", v.strict},
                      {"explanation", v.explanation}};
  j["piece"] = v.piece ? nlohmann::json(std::string(to_string(*v.piece))) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const GridSpec& g) {
  return {{"d", g.d}, {"N", g.n}, {"M", g.m}, {"P", g.period()}, {"omega", g.omega()}};
}

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"level", row.level},
                    {"source_norm", row.source_norm},
                    {"target_norm", row.target_norm},
                    {"ratio", row.ratio},
                    {"log2_ratio", row.log2_ratio}});
  }
  nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                      {"kind", "experiment"},
                      {"mode", std::string(to_string(r.mode))},
                      {"source", render(r.source)},
                      {"target", render(r.target)},
                      {"d", r.source.d},
                      {"family", std::string(to_string(r.family))},
                      {"comb_width", r.comb_width},
                      {"grid", to_json(r.grid)},
                      {"level_min", r.level_min},
                      {"level_max", r.level_max},
                      {"rows", rows},
                      {"fitted_slope", r.fitted_slope},
                      {"tolerance", r.tolerance},
                      {"spread", r.spread},
                      {"spread_bound", r.spread_bound},
                      {"pass", r.pass}};
  j["predicted_slope"] = r.predicted_slope ? nlohmann::json(to_string(*r.predicted_slope)) : nlohmann::json(nullptr);
  j["verdict"] = r.verdict ? to_json(*r.verdict) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const TailReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    points.push_back({{"t", to_string(r.t[i])}, {"size", r.sizes[i]}, {"value", r.values[i]}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "weighted-tail"},
          {"q", r.q.str()},
          {"d", r.d},
          {"points", points},
          {"growth", r.growth},
          {"factor", r.factor},
          {"fit_a", r.fit_a},
          {"fit_b", r.fit_b},
          {"max_residual", r.max_residual},
          {"residual_bound", r.residual_bound},
          {"monotone", r.monotone},
          {"pass", r.pass}};
}

nlohmann::json to_json(const NecessityReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < r.cubes.size(); ++i) {
    points.push_back({{"cube", r.cubes[i]}, {"partial_sum", r.partial_sums[i]}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "discrete-necessity"},
          {"r", r.r.str()},
          {"q", r.q.str()},
          {"d", r.d},
          {"s", to_string(r.s)},
          {"critical_s", to_string(r.critical_s)},
          {"exponent", to_string(r.exponent)},
          {"points", points},
          {"tail_bound", finite_or_null(r.tail_bound)},
          {"tail_tolerance", r.tail_tolerance},
          {"converges", r.converges},
          {"diverges", r.diverges}};
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "level,source_norm,target_norm,ratio,log2_ratio\n";
  for (const auto& row : r.rows) {
    out << row.level << ',' << row.source_norm << ',' << row.target_norm << ',' << row.ratio << ',' << row.log2_ratio
        << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<RegionCell>& cells) {
  std::ostringstream out;
  out << "x,y,holds,clause,critical_s,strict,piece\n";
  for (const auto& c : cells) {
    out << to_string(c.x) << ',' << to_string(c.y) << ',' << (c.verdict.holds ? "true" : "false") << ','
        << c.verdict.clause << ',' << to_string(c.verdict.critical_s) << ',' << (c.verdict.strict ? "true" : "false")
        << ',' << c.piece << '\n';
  }
  return out.str();
}

}  // namespace modspace

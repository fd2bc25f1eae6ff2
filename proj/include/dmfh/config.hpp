#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dmfh/channel.hpp"
#include "dmfh/subset.hpp"
#include "dmfh/topology.hpp"

namespace dmfh {

// One simulated scenario; defaults follow the indoor 28 GHz deployment with
// a 4x4 RU grid over 100m x 100m.
struct ScenarioConfig {
  std::string scenario_id = "default";
  int grid_rows = 4;
  int grid_cols = 4;
  double area_m2 = 100.0 * 100.0;
  int num_ues = 8;
  int num_blockers = 1000;
  double blocker_radius = 0.5;

  ChannelParams channel;

  SubsetRule subset_rule = SubsetRule::kTopM;
  int subset_m = 5;
  double subset_alpha = 0.95;
  AruCriterion aru_criterion = AruCriterion::kStrongestGain;

  int base_capacity = 10;
  int corner_multiplier = 2;
  int max_path_length = 0;  // 0 = auto: equal to base segment capacity
  UeOrderPolicy ue_order = UeOrderPolicy::kAscendingId;
  GridCorner du_corner = GridCorner::kSouthWest;
  bool routing_enabled = true;

  int realizations = 50;
  std::uint64_t master_seed = 1;
  int iterations = 1;
  double duplexing_dl_fraction = 0.5;  // recorded, not used by the SINR model

  int effective_max_path_length() const {
    return max_path_length > 0 ? max_path_length : base_capacity;
  }
  double grid_spacing() const { return std::sqrt(area_m2) / grid_rows; }

  void validate() const {
    const auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
    if (grid_rows < 1 || grid_cols < 1) fail("grid_rows/grid_cols must be >= 1");
    if (area_m2 <= 0) fail("area_m2 must be > 0");
    if (num_ues < 1) fail("num_ues must be >= 1");
    if (num_blockers < 0) fail("num_blockers must be >= 0");
    if (channel.bandwidth_hz <= 0) fail("bandwidth_hz must be > 0");
    if (channel.carrier_ghz <= 0) fail("carrier_ghz must be > 0");
    if (subset_rule == SubsetRule::kTopM && (subset_m < 1 || subset_m > grid_rows * grid_cols)) {
      fail("subset_m must be in [1, N]");
    }
    if (subset_rule == SubsetRule::kAlphaThreshold && (subset_alpha <= 0 || subset_alpha > 1)) {
      fail("subset_alpha must be in (0, 1]");
    }
    if (base_capacity < 1) fail("base_capacity must be >= 1");
    if (corner_multiplier < 1) fail("corner_multiplier must be >= 1");
    if (max_path_length < 0) fail("max_path_length must be >= 0 (0 = auto)");
    if (realizations < 1) fail("realizations must be >= 1");
    if (iterations < 1) fail("iterations must be >= 1");
  }
};

namespace detail {

inline SubsetRule parse_subset_rule(const std::string& s) {
  if (s == "top_m") return SubsetRule::kTopM;
  if (s == "alpha") return SubsetRule::kAlphaThreshold;
  throw std::invalid_argument("config: subset_rule must be top_m or alpha, got " + s);
}

inline AruCriterion parse_aru_criterion(const std::string& s) {
  if (s == "strongest_gain") return AruCriterion::kStrongestGain;
  if (s == "closest_to_du") return AruCriterion::kClosestToDu;
  throw std::invalid_argument("config: aru_criterion must be strongest_gain or closest_to_du");
}

inline UeOrderPolicy parse_ue_order(const std::string& s) {
  if (s == "ascending") return UeOrderPolicy::kAscendingId;
  if (s == "random") return UeOrderPolicy::kSeededRandom;
  throw std::invalid_argument("config: ue_order must be ascending or random");
}

inline GridCorner parse_corner(const std::string& s) {
  if (s == "south_west") return GridCorner::kSouthWest;
  if (s == "south_east") return GridCorner::kSouthEast;
  if (s == "north_west") return GridCorner::kNorthWest;
  if (s == "north_east") return GridCorner::kNorthEast;
  throw std::invalid_argument("config: unknown du_corner " + s);
}

inline std::string subset_rule_name(SubsetRule r) {
  return r == SubsetRule::kTopM ? "top_m" : "alpha";
}
inline std::string aru_criterion_name(AruCriterion c) {
  return c == AruCriterion::kStrongestGain ? "strongest_gain" : "closest_to_du";
}
inline std::string ue_order_name(UeOrderPolicy p) {
  return p == UeOrderPolicy::kAscendingId ? "ascending" : "random";
}
inline std::string corner_name(GridCorner c) {
  switch (c) {
    case GridCorner::kSouthWest: return "south_west";
    case GridCorner::kSouthEast: return "south_east";
    case GridCorner::kNorthWest: return "north_west";
    case GridCorner::kNorthEast: return "north_east";
  }
  return "south_west";
}

}  // namespace detail

inline ScenarioConfig config_from_json(const nlohmann::json& j) {
  ScenarioConfig c;
  const auto get = [&j](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("scenario_id", c.scenario_id);
  get("grid_rows", c.grid_rows);
  get("grid_cols", c.grid_cols);
  get("area_m2", c.area_m2);
  get("num_ues", c.num_ues);
  get("num_blockers", c.num_blockers);
  get("blocker_radius", c.blocker_radius);
  get("carrier_ghz", c.channel.carrier_ghz);
  get("bandwidth_hz", c.channel.bandwidth_hz);
  get("ru_power_dbm", c.channel.ru_power_dbm);
  get("noise_figure_db", c.channel.noise_figure_db);
  get("array_gain_db", c.channel.array_gain_db);
  get("shadow_fading", c.channel.shadow_fading);
  get("subset_m", c.subset_m);
  get("subset_alpha", c.subset_alpha);
  get("base_capacity", c.base_capacity);
  get("corner_multiplier", c.corner_multiplier);
  get("max_path_length", c.max_path_length);
  get("routing_enabled", c.routing_enabled);
  get("realizations", c.realizations);
  get("master_seed", c.master_seed);
  get("iterations", c.iterations);
  get("duplexing_dl_fraction", c.duplexing_dl_fraction);
  if (j.contains("subset_rule")) c.subset_rule = detail::parse_subset_rule(j.at("subset_rule"));
  if (j.contains("aru_criterion")) {
    c.aru_criterion = detail::parse_aru_criterion(j.at("aru_criterion"));
  }
  if (j.contains("ue_order")) c.ue_order = detail::parse_ue_order(j.at("ue_order"));
  if (j.contains("du_corner")) c.du_corner = detail::parse_corner(j.at("du_corner"));
  c.validate();
  return c;
}

inline nlohmann::json config_to_json(const ScenarioConfig& c) {
  return nlohmann::json{{"scenario_id", c.scenario_id},
                        {"grid_rows", c.grid_rows},
                        {"grid_cols", c.grid_cols},
                        {"area_m2", c.area_m2},
                        {"num_ues", c.num_ues},
                        {"num_blockers", c.num_blockers},
                        {"blocker_radius", c.blocker_radius},
                        {"carrier_ghz", c.channel.carrier_ghz},
                        {"bandwidth_hz", c.channel.bandwidth_hz},
                        {"ru_power_dbm", c.channel.ru_power_dbm},
                        {"noise_figure_db", c.channel.noise_figure_db},
                        {"array_gain_db", c.channel.array_gain_db},
                        {"shadow_fading", c.channel.shadow_fading},
                        {"subset_rule", detail::subset_rule_name(c.subset_rule)},
                        {"subset_m", c.subset_m},
                        {"subset_alpha", c.subset_alpha},
                        {"aru_criterion", detail::aru_criterion_name(c.aru_criterion)},
                        {"base_capacity", c.base_capacity},
                        {"corner_multiplier", c.corner_multiplier},
                        {"max_path_length", c.max_path_length},
                        {"ue_order", detail::ue_order_name(c.ue_order)},
                        {"du_corner", detail::corner_name(c.du_corner)},
                        {"routing_enabled", c.routing_enabled},
                        {"realizations", c.realizations},
                        {"master_seed", c.master_seed},
                        {"iterations", c.iterations},
                        {"duplexing_dl_fraction", c.duplexing_dl_fraction}};
}

inline ScenarioConfig load_config(std::istream& is) {
  nlohmann::json j;
  is >> j;
  return config_from_json(j);
}

}  // namespace dmfh

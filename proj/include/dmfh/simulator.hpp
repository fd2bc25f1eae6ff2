#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

#include "dmfh/association.hpp"
#include "dmfh/channel.hpp"
#include "dmfh/config.hpp"
#include "dmfh/grouping.hpp"
#include "dmfh/metrics.hpp"
#include "dmfh/precoding.hpp"
#include "dmfh/routing.hpp"
#include "dmfh/rng.hpp"
#include "dmfh/topology.hpp"

namespace dmfh {

struct RealizationDiagnostics {
  double zf_residual = 0.0;
  int ledger_peak_used = 0;
  int cleared_bits = 0;  // association entries removed by routing
};

struct RealizationResult {
  RealizationMetrics metrics;
  RealizationDiagnostics diagnostics;
  AssociationMatrix initial_assoc;
  AssociationMatrix updated_assoc;
  SinrReport sinr_report;
};

struct RunReport {
  ScenarioConfig config;
  MetricBatch batch;
  std::vector<RealizationDiagnostics> diagnostics;
  double duration_s = 0.0;
};

namespace detail {

enum : std::uint64_t { kSeedPlace = 1, kSeedChannel = 2, kSeedUeOrder = 3 };

inline std::vector<ServingSubset> select_subsets(const ScenarioConfig& config,
                                                 const std::vector<double>& large_scale,
                                                 int num_ues, int num_rus,
                                                 const std::vector<int>& du_hops) {
  std::vector<ServingSubset> subsets =
      config.subset_rule == SubsetRule::kTopM
          ? select_top_m(large_scale, num_ues, num_rus, config.subset_m)
          : select_alpha(large_scale, num_ues, num_rus, config.subset_alpha);
  for (ServingSubset& s : subsets) {
    if (s.ru_ids.empty()) continue;
    s.aru_id = select_aru(s, large_scale, num_rus, config.aru_criterion, &du_hops);
  }
  return subsets;
}

inline std::vector<int> ue_processing_order(const ScenarioConfig& config, int num_ues,
                                            std::uint64_t order_seed) {
  std::vector<int> order(static_cast<std::size_t>(num_ues));
  std::iota(order.begin(), order.end(), 0);
  if (config.ue_order == UeOrderPolicy::kSeededRandom) {
    Rng rng(order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

}  // namespace detail

// One seeded pass through the pipeline: place, draw channel, group, route,
// update association, precode, evaluate SINR.
inline RealizationResult run_realization(const ScenarioConfig& config,
                                         const FronthaulTopology& topology, int realization) {
  const std::uint64_t scen = hash_string(config.scenario_id);
  const auto r = static_cast<std::uint64_t>(realization);
  const int num_rus = topology.ru_count();
  const int max_len = config.effective_max_path_length();
  const std::vector<int> du_hops = hop_distances_from(topology, topology.du_node());

  const DeploymentRealization deployment =
      place_entities(config.area_m2, config.num_ues, config.num_blockers, config.blocker_radius,
                     derive_seed(config.master_seed, scen, r, detail::kSeedPlace));
  const ChannelState channel =
      draw_channel(deployment, topology, config.channel,
                   derive_seed(config.master_seed, scen, r, detail::kSeedChannel));
  const std::vector<int> ue_order = detail::ue_processing_order(
      config, config.num_ues, derive_seed(config.master_seed, scen, r, detail::kSeedUeOrder));

  std::vector<double> large_scale = channel.large_scale;
  AssociationMatrix initial;
  AssociationMatrix updated;
  RoutingLedger ledger(topology);
  RoutingOutcome outcome;

  for (int iter = 0; iter < config.iterations; ++iter) {
    std::vector<ServingSubset> subsets =
        detail::select_subsets(config, large_scale, config.num_ues, num_rus, du_hops);
    if (iter > 0) {
      // Later iterations regroup within the surviving association; dropped
      // UEs stay dropped.
      for (ServingSubset& s : subsets) {
        if (updated.is_dropped(s.ue_id) || updated.row_sum(s.ue_id) == 0) {
          s.ru_ids.clear();
          s.aru_id = -1;
        }
      }
    }
    AssociationMatrix assoc = to_association(subsets, config.num_ues, num_rus);
    if (iter == 0) initial = assoc;

    if (!config.routing_enabled) {
      updated = assoc;
      break;
    }
    ledger = RoutingLedger(topology);
    outcome = route_two_level(topology, ledger, subsets, max_len, &ue_order);
    updated = apply_routing_outcomes(assoc, outcome);

    // Mask out pruned links so the next iteration regroups on survivors.
    for (int k = 0; k < config.num_ues; ++k) {
      for (int n = 0; n < num_rus; ++n) {
        if (!updated.get(k, n)) large_scale[static_cast<std::size_t>(k * num_rus + n)] = 0.0;
      }
    }
  }

  const EffectiveChannel eff = effective_channel(channel, updated);
  const PrecoderSet precoders = normalize_power(czf(eff), channel.per_ru_power_w);
  const SinrReport report = sinr(channel, precoders, updated);

  RealizationResult result;
  result.metrics.scenario_id = config.scenario_id;
  result.metrics.total_ues = config.num_ues;
  for (std::size_t z = 0; z < ledger.total.size(); ++z) {
    result.metrics.segment_utilization.push_back(occupancy(ledger, static_cast<SegmentId>(z)));
    result.diagnostics.ledger_peak_used =
        std::max(result.diagnostics.ledger_peak_used, ledger.used[z]);
  }
  for (int k = 0; k < config.num_ues; ++k) {
    if (updated.is_dropped(k)) ++result.metrics.dropped_ues;
    if (report.served[static_cast<std::size_t>(k)]) {
      result.metrics.sinr_db.push_back(
          linear_to_db(report.sinr_linear[static_cast<std::size_t>(k)]));
    }
    if (initial.row_sum(k) > 0) {
      result.metrics.connection_ratio.push_back(connection_ratio(initial, updated, k));
    }
  }
  for (const RouteDecision& d : outcome.decisions) {
    if (d.level == RouteLevel::kL2 && d.best.has_value()) {
      result.metrics.l2_path_lengths.push_back(d.best->length());
    }
  }
  for (int k = 0; k < config.num_ues; ++k) {
    for (int n = 0; n < num_rus; ++n) {
      if (initial.get(k, n) && !updated.get(k, n)) ++result.diagnostics.cleared_bits;
    }
  }
  result.diagnostics.zf_residual = zf_residual(eff, precoders);
  result.initial_assoc = std::move(initial);
  result.updated_assoc = std::move(updated);
  result.sinr_report = report;
  return result;
}

inline RunReport run_scenario(const ScenarioConfig& config, int parallelism = 1) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const FronthaulTopology topology =
      build_grid(config.grid_rows, config.grid_cols, config.grid_spacing(), config.base_capacity,
                 config.corner_multiplier, config.du_corner);

  std::vector<RealizationResult> results(static_cast<std::size_t>(config.realizations));
  const int workers = std::max(1, std::min(parallelism, config.realizations));
  if (workers == 1) {
    for (int i = 0; i < config.realizations; ++i) {
      results[static_cast<std::size_t>(i)] = run_realization(config, topology, i);
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < config.realizations; i = next.fetch_add(1)) {
          results[static_cast<std::size_t>(i)] = run_realization(config, topology, i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  RunReport report;
  report.config = config;
  std::vector<RealizationMetrics> metrics;
  metrics.reserve(results.size());
  for (RealizationResult& r : results) {
    metrics.push_back(std::move(r.metrics));
    report.diagnostics.push_back(r.diagnostics);
  }
  report.batch = collect(metrics);
  report.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

inline std::vector<RunReport> run_sweep(const std::vector<ScenarioConfig>& configs,
                                        int parallelism = 1) {
  if (configs.empty()) throw std::invalid_argument("run_sweep: empty config list");
  std::vector<RunReport> reports;
  reports.reserve(configs.size());
  for (const ScenarioConfig& c : configs) reports.push_back(run_scenario(c, parallelism));
  return reports;
}

// The reported evaluation grid: K in {8,15} x segment capacity in {5,10,100}.
inline std::vector<ScenarioConfig> default_sweep(const ScenarioConfig& base) {
  std::vector<ScenarioConfig> configs;
  for (int k : {8, 15}) {
    for (int cap : {5, 10, 100}) {
      ScenarioConfig c = base;
      c.num_ues = k;
      c.base_capacity = cap;
      c.scenario_id = "K" + std::to_string(k) + "_cap" + std::to_string(cap);
      configs.push_back(c);
    }
  }
  return configs;
}

}  // namespace dmfh

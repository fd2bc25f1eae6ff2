#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dmfh/rng.hpp"
#include "dmfh/topology.hpp"

namespace dmfh {

struct Blocker {
  Position center;
  double radius = 0.5;
};

struct DeploymentRealization {
  std::vector<Position> ue_positions;
  std::vector<Blocker> blockers;
  std::uint64_t rng_seed = 0;
};

// Per-realization radio state. h is row-major K x N (one effective antenna
// per RU, array gain folded into the large-scale coefficients).
struct ChannelState {
  int num_ues = 0;
  int num_rus = 0;
  std::vector<std::complex<double>> h;     // K*N complex gains, linear scale
  std::vector<double> large_scale;         // K*N, h'_kn = E{|h_kn|^2}
  double noise_power_w = 0.0;
  double per_ru_power_w = 0.0;

  std::complex<double> gain(int k, int n) const {
    return h[static_cast<std::size_t>(k * num_rus + n)];
  }
  double large_scale_at(int k, int n) const {
    return large_scale[static_cast<std::size_t>(k * num_rus + n)];
  }
};

struct ChannelParams {
  double carrier_ghz = 28.0;
  double bandwidth_hz = 200e6;
  double ru_power_dbm = 13.0;
  double noise_figure_db = 10.0;
  double array_gain_db = 15.051;  // 10*log10(32): two 4x4 subarrays
  bool shadow_fading = true;
  double shadow_sigma_los_db = 3.0;    // TR 38.901 InH-Office
  double shadow_sigma_nlos_db = 8.03;
};

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Thermal noise floor: -174 dBm/Hz + 10 log10(B) + NF, in watts.
inline double noise_power(double bandwidth_hz, double noise_figure_db) {
  if (bandwidth_hz <= 0.0) throw std::invalid_argument("noise_power: bandwidth must be > 0");
  const double dbm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return dbm_to_watts(dbm);
}

// 3GPP TR 38.901 InH-Office pathloss, LOS/NLOS branch, distance in meters.
inline double pathloss_db(double distance_m, bool los, double carrier_ghz) {
  if (distance_m <= 0.0) throw std::invalid_argument("pathloss_db: distance must be > 0");
  const double pl_los = 32.4 + 17.3 * std::log10(distance_m) + 20.0 * std::log10(carrier_ghz);
  if (los) return pl_los;
  const double pl_nlos = 17.3 + 38.3 * std::log10(distance_m) + 24.9 * std::log10(carrier_ghz);
  return std::max(pl_los, pl_nlos);
}

// True iff the a-b line segment intersects no blocker disk.
inline bool is_los(Position a, Position b, const std::vector<Blocker>& blockers) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  for (const Blocker& blk : blockers) {
    double t = 0.0;
    if (len2 > 0.0) {
      t = ((blk.center.x - a.x) * dx + (blk.center.y - a.y) * dy) / len2;
      t = std::clamp(t, 0.0, 1.0);
    }
    const double cx = a.x + t * dx - blk.center.x;
    const double cy = a.y + t * dy - blk.center.y;
    if (cx * cx + cy * cy <= blk.radius * blk.radius) return false;
  }
  return true;
}

// UEs and blockers uniform i.i.d. over a square area of side sqrt(area_m2).
inline DeploymentRealization place_entities(double area_m2, int num_ues, int num_blockers,
                                            double blocker_radius, std::uint64_t seed) {
  if (num_ues < 1) throw std::invalid_argument("place_entities: K must be >= 1");
  if (num_blockers < 0) throw std::invalid_argument("place_entities: B must be >= 0");
  const double side = std::sqrt(area_m2);
  Rng rng(seed);
  std::uniform_real_distribution<double> coord(0.0, side);

  DeploymentRealization out;
  out.rng_seed = seed;
  out.ue_positions.reserve(static_cast<std::size_t>(num_ues));
  for (int k = 0; k < num_ues; ++k) {
    const double x = coord(rng);
    const double y = coord(rng);
    out.ue_positions.push_back({x, y});
  }
  out.blockers.reserve(static_cast<std::size_t>(num_blockers));
  for (int b = 0; b < num_blockers; ++b) {
    const double x = coord(rng);
    const double y = coord(rng);
    out.blockers.push_back(Blocker{{x, y}, blocker_radius});
  }
  return out;
}

// h_kn = sqrt(g_kn) * z_kn, z ~ CN(0,1); g folds pathloss, array gain and
// optional log-normal shadowing. LOS/NLOS per link from blocker geometry.
inline ChannelState draw_channel(const DeploymentRealization& realization,
                                 const FronthaulTopology& topology, const ChannelParams& params,
                                 std::uint64_t seed) {
  const int num_ues = static_cast<int>(realization.ue_positions.size());
  const int num_rus = topology.ru_count();
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  ChannelState cs;
  cs.num_ues = num_ues;
  cs.num_rus = num_rus;
  cs.noise_power_w = noise_power(params.bandwidth_hz, params.noise_figure_db);
  cs.per_ru_power_w = dbm_to_watts(params.ru_power_dbm);
  cs.h.resize(static_cast<std::size_t>(num_ues * num_rus));
  cs.large_scale.resize(static_cast<std::size_t>(num_ues * num_rus));

  for (int k = 0; k < num_ues; ++k) {
    const Position ue = realization.ue_positions[static_cast<std::size_t>(k)];
    for (int n = 0; n < num_rus; ++n) {
      const Position ru = topology.node(n).position;
      const double dx = ue.x - ru.x, dy = ue.y - ru.y;
      const double dist = std::max(std::hypot(dx, dy), 1e-3);
      const bool los = is_los(ue, ru, realization.blockers);
      double gain_db = -pathloss_db(dist, los, params.carrier_ghz) + params.array_gain_db;
      if (params.shadow_fading) {
        const double sigma = los ? params.shadow_sigma_los_db : params.shadow_sigma_nlos_db;
        gain_db += sigma * normal(rng);
      }
      const double g = db_to_linear(gain_db);
      const double re = normal(rng) / std::sqrt(2.0);
      const double im = normal(rng) / std::sqrt(2.0);
      const std::size_t idx = static_cast<std::size_t>(k * num_rus + n);
      cs.large_scale[idx] = g;
      cs.h[idx] = std::sqrt(g) * std::complex<double>(re, im);
    }
  }
  return cs;
}

}  // namespace dmfh

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dmfh/association.hpp"
#include "dmfh/subset.hpp"

namespace dmfh {

namespace detail {

// RU ids sorted by descending coefficient, ascending id on ties.
inline std::vector<int> rank_rus(const std::vector<double>& row) {
  std::vector<int> order(row.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&row](int a, int b) {
    return row[static_cast<std::size_t>(a)] > row[static_cast<std::size_t>(b)];
  });
  return order;
}

inline std::vector<double> gain_row(const std::vector<double>& large_scale, int num_rus, int k) {
  const auto base = static_cast<std::size_t>(k * num_rus);
  return std::vector<double>(large_scale.begin() + base, large_scale.begin() + base + num_rus);
}

}  // namespace detail

// Top-M rule: for each UE, the m RUs with the largest large-scale
// coefficients.
inline std::vector<ServingSubset> select_top_m(const std::vector<double>& large_scale, int num_ues,
                                               int num_rus, int m) {
  if (m < 1 || m > num_rus) throw std::invalid_argument("select_top_m: m out of range");
  std::vector<ServingSubset> out;
  out.reserve(static_cast<std::size_t>(num_ues));
  for (int k = 0; k < num_ues; ++k) {
    const auto row = detail::gain_row(large_scale, num_rus, k);
    auto order = detail::rank_rus(row);
    order.resize(static_cast<std::size_t>(m));
    out.push_back(ServingSubset{k, std::move(order), -1});
  }
  return out;
}

// Cumulative-contribution rule: smallest prefix of the descending-gain
// ranking whose normalized cumulative sum reaches alpha.
inline std::vector<ServingSubset> select_alpha(const std::vector<double>& large_scale, int num_ues,
                                               int num_rus, double alpha) {
  if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("select_alpha: alpha out of (0,1]");
  std::vector<ServingSubset> out;
  out.reserve(static_cast<std::size_t>(num_ues));
  for (int k = 0; k < num_ues; ++k) {
    const auto row = detail::gain_row(large_scale, num_rus, k);
    const auto order = detail::rank_rus(row);
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    std::vector<int> picked;
    double cum = 0.0;
    for (int id : order) {
      if (row[static_cast<std::size_t>(id)] <= 0.0 && !picked.empty()) break;
      picked.push_back(id);
      cum += row[static_cast<std::size_t>(id)];
      if (total > 0.0 && cum / total >= alpha) break;
    }
    out.push_back(ServingSubset{k, std::move(picked), -1});
  }
  return out;
}

// ARU = subset member with the largest large-scale coefficient (ties:
// lowest id). hop_distance_to_du supports the alternative criterion.
inline int select_aru(const ServingSubset& subset, const std::vector<double>& large_scale,
                      int num_rus, AruCriterion criterion = AruCriterion::kStrongestGain,
                      const std::vector<int>* hop_distance_to_du = nullptr) {
  if (subset.ru_ids.empty()) throw std::invalid_argument("select_aru: empty subset");
  int best = subset.ru_ids.front();
  for (int id : subset.ru_ids) {
    if (criterion == AruCriterion::kStrongestGain) {
      const double g = large_scale[static_cast<std::size_t>(subset.ue_id * num_rus + id)];
      const double gb = large_scale[static_cast<std::size_t>(subset.ue_id * num_rus + best)];
      if (g > gb || (g == gb && id < best)) best = id;
    } else {
      const int d = (*hop_distance_to_du)[static_cast<std::size_t>(id)];
      const int db = (*hop_distance_to_du)[static_cast<std::size_t>(best)];
      if (d < db || (d == db && id < best)) best = id;
    }
  }
  return best;
}

// Binary K x N matrix A, A[k][n] = 1 iff RU n serves UE k.
inline AssociationMatrix to_association(const std::vector<ServingSubset>& subsets, int num_ues,
                                        int num_rus) {
  AssociationMatrix a(num_ues, num_rus);
  for (const ServingSubset& s : subsets) {
    for (int id : s.ru_ids) a.set(s.ue_id, id, true);
    a.aru[static_cast<std::size_t>(s.ue_id)] = s.aru_id;
  }
  return a;
}

}  // namespace dmfh

#pragma once

#include <stdexcept>
#include <vector>

#include "dmfh/routing.hpp"

namespace dmfh {

// Binary UE x RU association with per-UE ARU designation and drop flags.
// Rows are UEs. Updates only clear bits, never set them.
struct AssociationMatrix {
  int num_ues = 0;
  int num_rus = 0;
  std::vector<char> a;        // row-major K*N
  std::vector<int> aru;       // per-UE ARU id, -1 if unset
  std::vector<char> dropped;  // per-UE drop flag

  AssociationMatrix() = default;
  AssociationMatrix(int k, int n)
      : num_ues(k),
        num_rus(n),
        a(static_cast<std::size_t>(k * n), 0),
        aru(static_cast<std::size_t>(k), -1),
        dropped(static_cast<std::size_t>(k), 0) {}

  bool get(int k, int n) const { return a[static_cast<std::size_t>(k * num_rus + n)] != 0; }
  void set(int k, int n, bool v) { a[static_cast<std::size_t>(k * num_rus + n)] = v ? 1 : 0; }
  bool is_dropped(int k) const { return dropped[static_cast<std::size_t>(k)] != 0; }

  int row_sum(int k) const {
    int s = 0;
    for (int n = 0; n < num_rus; ++n) s += get(k, n) ? 1 : 0;
    return s;
  }
};

// Clears the association bit of every (UE, RU) pair whose route decision is
// BR=0. An L1 failure zeroes the whole UE row and sets the drop flag; on L1
// success the ARU bit stays set.
inline AssociationMatrix apply_routing_outcomes(const AssociationMatrix& initial,
                                                const RoutingOutcome& outcome) {
  AssociationMatrix updated = initial;
  for (int k = 0; k < initial.num_ues; ++k) {
    const auto ue_idx = static_cast<std::size_t>(k);
    if (initial.row_sum(k) == 0) continue;
    const RouteDecision* l1 = outcome.l1_decision(k);
    if (l1 == nullptr) throw std::invalid_argument("apply_routing_outcomes: missing L1 decision");
    if (!l1->best.has_value()) {
      for (int n = 0; n < initial.num_rus; ++n) updated.set(k, n, false);
      updated.dropped[ue_idx] = 1;
      continue;
    }
    for (int n = 0; n < initial.num_rus; ++n) {
      if (!initial.get(k, n)) continue;
      if (n == initial.aru[ue_idx]) continue;  // reached at L1
      const RouteDecision* l2 = outcome.l2_decision(k, n);
      if (l2 == nullptr) throw std::invalid_argument("apply_routing_outcomes: missing L2 decision");
      if (!l2->best.has_value()) updated.set(k, n, false);
    }
  }
  return updated;
}

// Surviving serving RUs over the initial subset size, per UE.
inline double connection_ratio(const AssociationMatrix& initial, const AssociationMatrix& updated,
                               int ue_id) {
  const int m = initial.row_sum(ue_id);
  if (m == 0) throw std::invalid_argument("connection_ratio: UE had an empty initial subset");
  return static_cast<double>(updated.row_sum(ue_id)) / static_cast<double>(m);
}

}  // namespace dmfh

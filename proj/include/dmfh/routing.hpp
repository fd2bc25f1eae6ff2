#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dmfh/subset.hpp"
#include "dmfh/topology.hpp"

namespace dmfh {

// Mutable per-segment packet counters against the topology's capacities.
// Single-writer within a realization.
struct RoutingLedger {
  std::vector<int> used;
  std::vector<int> total;

  RoutingLedger() = default;
  explicit RoutingLedger(const FronthaulTopology& topology) {
    total.reserve(static_cast<std::size_t>(topology.segment_count()));
    for (const Segment& s : topology.segments()) total.push_back(s.total_capacity);
    used.assign(total.size(), 0);
  }

  bool saturated(SegmentId z) const {
    return used[static_cast<std::size_t>(z)] >= total[static_cast<std::size_t>(z)];
  }
};

// Simple path: consecutive segments share a node, no repeated node.
struct Route {
  std::vector<SegmentId> segments;
  std::vector<NodeId> nodes;  // source..destination, size = segments.size()+1

  int length() const { return static_cast<int>(segments.size()); }
};

enum class RouteLevel { kL1, kL2 };

struct RouteDecision {
  int ue_id = -1;
  int target_ru_id = -1;
  RouteLevel level = RouteLevel::kL1;
  std::optional<Route> best;  // absent = BR=0
  double utility = 0.0;
  int candidates_count = 0;
};

// Occupancy rate beta of one segment, in [0,1].
inline double occupancy(const RoutingLedger& ledger, SegmentId z) {
  return static_cast<double>(ledger.used[static_cast<std::size_t>(z)]) /
         static_cast<double>(ledger.total[static_cast<std::size_t>(z)]);
}

// Congestion-awareness metric: product of (1 - beta) over the route.
inline double utilizable_rate(const RoutingLedger& ledger, const Route& route) {
  double rate = 1.0;
  for (SegmentId z : route.segments) rate *= 1.0 - occupancy(ledger, z);
  return rate;
}

// Route score f(R) = utilizable rate / path length.
inline double utility(const RoutingLedger& ledger, const Route& route) {
  return utilizable_rate(ledger, route) / static_cast<double>(route.length());
}

namespace detail {

struct PathSearch {
  const FronthaulTopology* topology;
  const RoutingLedger* ledger;
  NodeId dst;
  int max_len;
  std::vector<char> visited;
  Route current;
  std::vector<Route>* out;

  void extend(NodeId node) {
    if (node == dst) {
      out->push_back(current);
      return;
    }
    if (current.length() >= max_len) return;
    // Ascending neighbor-id expansion gives lexicographic output order.
    std::vector<std::pair<NodeId, SegmentId>> next;
    for (SegmentId z : topology->incident_segments(node)) {
      if (ledger->saturated(z)) continue;
      const NodeId other = topology->segment(z).other(node);
      if (!visited[static_cast<std::size_t>(other)]) next.emplace_back(other, z);
    }
    std::sort(next.begin(), next.end());
    for (auto [other, z] : next) {
      visited[static_cast<std::size_t>(other)] = 1;
      current.segments.push_back(z);
      current.nodes.push_back(other);
      extend(other);
      current.nodes.pop_back();
      current.segments.pop_back();
      visited[static_cast<std::size_t>(other)] = 0;
    }
  }
};

}  // namespace detail

// All simple paths src -> dst with at most max_len segments, traversing no
// fully occupied segment; lexicographic by node sequence.
inline std::vector<Route> discover_routes(const FronthaulTopology& topology,
                                          const RoutingLedger& ledger, NodeId src, NodeId dst,
                                          int max_len) {
  if (src == dst) throw std::invalid_argument("discover_routes: src == dst");
  if (max_len < 1) throw std::invalid_argument("discover_routes: max_len must be >= 1");
  std::vector<Route> routes;
  detail::PathSearch search{&topology, &ledger, dst, max_len,
                            std::vector<char>(static_cast<std::size_t>(topology.du_node() + 1), 0),
                            Route{}, &routes};
  search.visited[static_cast<std::size_t>(src)] = 1;
  search.current.nodes.push_back(src);
  search.extend(src);
  return routes;
}

// argmax of f over the candidates; ties broken by shorter length, then by
// the candidates' lexicographic order. Empty candidate set encodes BR=0.
inline RouteDecision best_route(const std::vector<Route>& candidates, const RoutingLedger& ledger) {
  RouteDecision decision;
  decision.candidates_count = static_cast<int>(candidates.size());
  const Route* best = nullptr;
  double best_f = 0.0;
  for (const Route& r : candidates) {
    const double f = utility(ledger, r);
    if (best == nullptr || f > best_f || (f == best_f && r.length() < best->length())) {
      best = &r;
      best_f = f;
    }
  }
  if (best != nullptr) {
    decision.best = *best;
    decision.utility = best_f;
  }
  return decision;
}

// Adds one packet-unit on every segment of the route.
inline void commit(RoutingLedger& ledger, const Route& route) {
  for (SegmentId z : route.segments) {
    if (ledger.saturated(z)) throw std::logic_error("commit: segment already saturated");
    ++ledger.used[static_cast<std::size_t>(z)];
  }
}

struct RoutingOutcome {
  int num_ues = 0;
  int num_rus = 0;
  std::vector<RouteDecision> decisions;
  std::vector<int> l1_index;  // per UE, -1 if none
  std::vector<int> l2_index;  // per (UE, RU), -1 if none

  RoutingOutcome() = default;
  RoutingOutcome(int k, int n)
      : num_ues(k),
        num_rus(n),
        l1_index(static_cast<std::size_t>(k), -1),
        l2_index(static_cast<std::size_t>(k * n), -1) {}

  const RouteDecision* l1_decision(int ue) const {
    const int i = l1_index[static_cast<std::size_t>(ue)];
    return i < 0 ? nullptr : &decisions[static_cast<std::size_t>(i)];
  }
  const RouteDecision* l2_decision(int ue, int ru) const {
    const int i = l2_index[static_cast<std::size_t>(ue * num_rus + ru)];
    return i < 0 ? nullptr : &decisions[static_cast<std::size_t>(i)];
  }
};

// Two-level route discovery with capacity commits. L1 connects the DU to
// each UE's ARU; L2 connects the ARU to the remaining serving RUs in
// descending large-scale order. UEs are processed in the given order and
// ledger state carries across UEs and levels. An L1 failure skips the UE's
// L2 stage entirely.
inline RoutingOutcome route_two_level(const FronthaulTopology& topology, RoutingLedger& ledger,
                                      const std::vector<ServingSubset>& subsets, int max_len,
                                      const std::vector<int>* ue_order = nullptr) {
  const int num_ues = static_cast<int>(subsets.size());
  RoutingOutcome outcome(num_ues, topology.ru_count());

  std::vector<int> order;
  if (ue_order != nullptr) {
    order = *ue_order;
  } else {
    order.resize(static_cast<std::size_t>(num_ues));
    std::iota(order.begin(), order.end(), 0);
  }

  const auto record = [&outcome](RouteDecision d, int* slot) {
    *slot = static_cast<int>(outcome.decisions.size());
    outcome.decisions.push_back(std::move(d));
  };

  for (int ue : order) {
    const ServingSubset& subset = subsets[static_cast<std::size_t>(ue)];
    if (subset.ru_ids.empty()) continue;

    auto l1_routes = discover_routes(topology, ledger, topology.du_node(), subset.aru_id, max_len);
    RouteDecision l1 = best_route(l1_routes, ledger);
    l1.ue_id = ue;
    l1.target_ru_id = subset.aru_id;
    l1.level = RouteLevel::kL1;
    const bool l1_ok = l1.best.has_value();
    if (l1_ok) commit(ledger, *l1.best);
    record(std::move(l1), &outcome.l1_index[static_cast<std::size_t>(ue)]);
    if (!l1_ok) continue;

    // ru_ids are already sorted by descending large-scale coefficient.
    for (int ru : subset.ru_ids) {
      if (ru == subset.aru_id) continue;
      auto l2_routes = discover_routes(topology, ledger, subset.aru_id, ru, max_len);
      RouteDecision l2 = best_route(l2_routes, ledger);
      l2.ue_id = ue;
      l2.target_ru_id = ru;
      l2.level = RouteLevel::kL2;
      if (l2.best.has_value()) commit(ledger, *l2.best);
      record(std::move(l2),
             &outcome.l2_index[static_cast<std::size_t>(ue * topology.ru_count() + ru)]);
    }
  }
  return outcome;
}

}  // namespace dmfh

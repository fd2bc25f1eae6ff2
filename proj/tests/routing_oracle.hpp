// Test-only brute-force oracle for route selection. Independent of the
// library's search: plain adjacency-matrix enumeration of simple paths,
// scored and ranked from scratch.
#pragma once

#include <optional>
#include <vector>

#include "dmfh/routing.hpp"
#include "dmfh/topology.hpp"

namespace oracle {

struct Path {
  std::vector<int> nodes;
  std::vector<int> segments;
  double f = 0.0;
};

inline void enumerate(const dmfh::FronthaulTopology& topo, const dmfh::RoutingLedger& ledger,
                      int dst, int max_len, std::vector<int>& nodes, std::vector<int>& segs,
                      std::vector<char>& on_path, std::vector<Path>& out) {
  const int here = nodes.back();
  if (here == dst) {
    double rho = 1.0;
    for (int z : segs) {
      rho *= 1.0 - static_cast<double>(ledger.used[static_cast<std::size_t>(z)]) /
                       ledger.total[static_cast<std::size_t>(z)];
    }
    out.push_back(Path{nodes, segs, rho / static_cast<double>(segs.size())});
    return;
  }
  if (static_cast<int>(segs.size()) >= max_len) return;
  for (const dmfh::Segment& s : topo.segments()) {
    if (!s.touches(here)) continue;
    if (ledger.used[static_cast<std::size_t>(s.id)] >= ledger.total[static_cast<std::size_t>(s.id)])
      continue;
    const int other = s.other(here);
    if (on_path[static_cast<std::size_t>(other)]) continue;
    on_path[static_cast<std::size_t>(other)] = 1;
    nodes.push_back(other);
    segs.push_back(s.id);
    enumerate(topo, ledger, dst, max_len, nodes, segs, on_path, out);
    segs.pop_back();
    nodes.pop_back();
    on_path[static_cast<std::size_t>(other)] = 0;
  }
}

// argmax f; ties: fewer segments, then lexicographically smaller node list.
inline std::optional<Path> best(const dmfh::FronthaulTopology& topo,
                                const dmfh::RoutingLedger& ledger, int src, int dst, int max_len) {
  std::vector<int> nodes{src}, segs;
  std::vector<char> on_path(static_cast<std::size_t>(topo.du_node() + 1), 0);
  on_path[static_cast<std::size_t>(src)] = 1;
  std::vector<Path> all;
  enumerate(topo, ledger, dst, max_len, nodes, segs, on_path, all);
  std::optional<Path> winner;
  for (const Path& p : all) {
    if (!winner || p.f > winner->f ||
        (p.f == winner->f && (p.segments.size() < winner->segments.size() ||
                              (p.segments.size() == winner->segments.size() &&
                               p.nodes < winner->nodes)))) {
      winner = p;
    }
  }
  return winner;
}

}  // namespace oracle

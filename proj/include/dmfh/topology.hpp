#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmfh {

using NodeId = int;
using SegmentId = int;

struct Position {
  double x = 0.0;
  double y = 0.0;
};

struct RuNode {
  NodeId id = 0;
  Position position;
  int antenna_count = 1;
};

// A fronthaul link between two neighboring nodes, with a finite packet
// capacity per scheduling interval.
struct Segment {
  SegmentId id = 0;
  NodeId endpoint_a = 0;
  NodeId endpoint_b = 0;
  int total_capacity = 1;

  NodeId other(NodeId n) const { return n == endpoint_a ? endpoint_b : endpoint_a; }
  bool touches(NodeId n) const { return n == endpoint_a || n == endpoint_b; }
};

// RU mesh plus a DU attached at one grid corner by a dedicated segment.
// Immutable after construction.
class FronthaulTopology {
 public:
  FronthaulTopology(std::vector<RuNode> nodes, NodeId du_node, Position du_position,
                    std::vector<Segment> segments)
      : nodes_(std::move(nodes)),
        du_node_(du_node),
        du_position_(du_position),
        segments_(std::move(segments)),
        adjacency_(static_cast<std::size_t>(du_node) + 1) {
    for (const Segment& s : segments_) {
      adjacency_[static_cast<std::size_t>(s.endpoint_a)].push_back(s.id);
      adjacency_[static_cast<std::size_t>(s.endpoint_b)].push_back(s.id);
    }
  }

  int ru_count() const { return static_cast<int>(nodes_.size()); }
  int segment_count() const { return static_cast<int>(segments_.size()); }
  NodeId du_node() const { return du_node_; }
  Position du_position() const { return du_position_; }
  const std::vector<RuNode>& nodes() const { return nodes_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& segment(SegmentId id) const { return segments_.at(static_cast<std::size_t>(id)); }
  const RuNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  bool is_du(NodeId id) const { return id == du_node_; }

  // Segments whose endpoint set contains node_id, ascending segment id.
  const std::vector<SegmentId>& incident_segments(NodeId node_id) const {
    if (node_id < 0 || node_id > du_node_) {
      throw std::out_of_range("incident_segments: unknown node id " + std::to_string(node_id));
    }
    return adjacency_[static_cast<std::size_t>(node_id)];
  }

  // One record per segment: id, endpoint_a, endpoint_b, capacity.
  void dump(std::ostream& os) const {
    os << "id\tendpoint_a\tendpoint_b\tcapacity\n";
    for (const Segment& s : segments_) {
      os << s.id << '\t' << s.endpoint_a << '\t' << s.endpoint_b << '\t' << s.total_capacity
         << '\n';
    }
  }

 private:
  std::vector<RuNode> nodes_;
  NodeId du_node_;
  Position du_position_;
  std::vector<Segment> segments_;
  std::vector<std::vector<SegmentId>> adjacency_;  // node id -> incident segment ids, ascending
};

enum class GridCorner { kSouthWest, kSouthEast, kNorthWest, kNorthEast };

// Builds a rows x cols RU grid with the DU attached to one corner RU by a
// single dedicated segment. The DU attachment segment and every inter-RU
// segment incident to the attachment RU carry
// base_capacity * du_corner_multiplier; all other segments carry
// base_capacity. Segment ids: horizontal segments row-major, then vertical
// segments, DU segment last. RU ids are row-major; the DU gets id rows*cols.
inline FronthaulTopology build_grid(int rows, int cols, double spacing, int base_capacity,
                                    int du_corner_multiplier,
                                    GridCorner du_corner = GridCorner::kSouthWest,
                                    int antennas_per_ru = 1) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("build_grid: zero-dimension grid");
  if (base_capacity < 1) throw std::invalid_argument("build_grid: base_capacity must be >= 1");
  if (du_corner_multiplier < 1) {
    throw std::invalid_argument("build_grid: du_corner_multiplier must be >= 1");
  }

  const int n = rows * cols;
  const auto node_at = [cols](int r, int c) { return r * cols + c; };

  std::vector<RuNode> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  const double offset = spacing / 2.0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      nodes.push_back(RuNode{node_at(r, c), {offset + c * spacing, offset + r * spacing},
                             antennas_per_ru});
    }
  }

  NodeId attach_ru = 0;
  switch (du_corner) {
    case GridCorner::kSouthWest: attach_ru = node_at(0, 0); break;
    case GridCorner::kSouthEast: attach_ru = node_at(0, cols - 1); break;
    case GridCorner::kNorthWest: attach_ru = node_at(rows - 1, 0); break;
    case GridCorner::kNorthEast: attach_ru = node_at(rows - 1, cols - 1); break;
  }
  const NodeId du = n;

  std::vector<Segment> segments;
  segments.reserve(static_cast<std::size_t>(rows * (cols - 1) + cols * (rows - 1) + 1));
  const auto boosted = [&](NodeId a, NodeId b) {
    return (a == attach_ru || b == attach_ru) ? base_capacity * du_corner_multiplier
                                              : base_capacity;
  };
  SegmentId next = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      const NodeId a = node_at(r, c), b = node_at(r, c + 1);
      segments.push_back(Segment{next++, a, b, boosted(a, b)});
    }
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const NodeId a = node_at(r, c), b = node_at(r + 1, c);
      segments.push_back(Segment{next++, a, b, boosted(a, b)});
    }
  }
  segments.push_back(Segment{next++, attach_ru, du, base_capacity * du_corner_multiplier});

  // DU sits just outside the grid, past the attachment corner.
  const Position corner_pos = nodes[static_cast<std::size_t>(attach_ru)].position;
  const Position du_pos{corner_pos.x - offset, corner_pos.y - offset};

  return FronthaulTopology(std::move(nodes), du, du_pos, std::move(segments));
}

// BFS hop distance from the given node to every node (index = node id);
// -1 for unreachable nodes.
inline std::vector<int> hop_distances_from(const FronthaulTopology& topology, NodeId start) {
  std::vector<int> dist(static_cast<std::size_t>(topology.du_node()) + 1, -1);
  std::vector<NodeId> frontier{start};
  dist[static_cast<std::size_t>(start)] = 0;
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (SegmentId z : topology.incident_segments(u)) {
        const NodeId v = topology.segment(z).other(u);
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace dmfh

#include <catch2/catch_amalgamated.hpp>

#include "dmfh/topology.hpp"

using namespace dmfh;

namespace {

int inter_ru_degree(const FronthaulTopology& t, NodeId n) {
  int d = 0;
  for (SegmentId z : t.incident_segments(n)) {
    if (!t.segment(z).touches(t.du_node())) ++d;
  }
  return d;
}

}  // namespace

TEST_CASE("4x4 grid matches the reference deployment") {
  const auto t = build_grid(4, 4, 25.0, 5, 2);
  REQUIRE(t.ru_count() == 16);
  // 24 inter-RU segments plus the DU attachment.
  REQUIRE(t.segment_count() == 25);

  const NodeId attach = t.segment(t.segment_count() - 1).endpoint_a;
  REQUIRE(attach == 0);
  for (const Segment& s : t.segments()) {
    const bool corner = s.touches(attach) || s.touches(t.du_node());
    REQUIRE(s.total_capacity == (corner ? 10 : 5));
  }
}

TEST_CASE("1x2 grid is the smallest topology") {
  const auto t = build_grid(1, 2, 10.0, 1, 1);
  REQUIRE(t.ru_count() == 2);
  REQUIRE(t.segment_count() == 2);  // one inter-RU segment + DU attachment
  REQUIRE(t.segment(0).total_capacity == 1);
  REQUIRE(inter_ru_degree(t, 0) == 1);
  REQUIRE(inter_ru_degree(t, 1) == 1);
}

TEST_CASE("3x3 grid combinatorics") {
  const auto t = build_grid(3, 3, 10.0, 5, 2);
  REQUIRE(t.segment_count() == 13);  // 12 inter-RU + DU
  REQUIRE(inter_ru_degree(t, 4) == 4);  // center
  REQUIRE(inter_ru_degree(t, 0) == 2);  // corner
}

TEST_CASE("incident segments are ascending and exact") {
  const auto t = build_grid(4, 4, 25.0, 5, 2);
  for (NodeId n = 0; n <= t.du_node(); ++n) {
    const auto& inc = t.incident_segments(n);
    REQUIRE(std::is_sorted(inc.begin(), inc.end()));
    for (SegmentId z : inc) REQUIRE(t.segment(z).touches(n));
    int expected = 0;
    for (const Segment& s : t.segments()) {
      if (s.touches(n)) ++expected;
    }
    REQUIRE(static_cast<int>(inc.size()) == expected);
  }
  REQUIRE(inter_ru_degree(t, 5) == 4);   // interior RU
  REQUIRE(inter_ru_degree(t, 15) == 2);  // far corner
  REQUIRE_THROWS_AS(t.incident_segments(99), std::out_of_range);
}

TEST_CASE("segment count formula and connectivity for all small grids") {
  for (int rows = 1; rows <= 8; ++rows) {
    for (int cols = 1; cols <= 8; ++cols) {
      const auto t = build_grid(rows, cols, 5.0, 3, 2);
      REQUIRE(t.segment_count() == rows * (cols - 1) + cols * (rows - 1) + 1);
      const auto dist = hop_distances_from(t, t.du_node());
      for (NodeId n = 0; n < t.ru_count(); ++n) REQUIRE(dist[static_cast<std::size_t>(n)] >= 1);
    }
  }
}

TEST_CASE("capacity boost applies exactly to the DU-adjacent segments") {
  for (GridCorner corner : {GridCorner::kSouthWest, GridCorner::kNorthEast}) {
    const auto t = build_grid(4, 4, 25.0, 7, 3, corner);
    const NodeId attach = t.segment(t.segment_count() - 1).endpoint_a;
    for (const Segment& s : t.segments()) {
      const bool boosted = s.touches(attach) || s.touches(t.du_node());
      REQUIRE(s.total_capacity == (boosted ? 21 : 7));
    }
  }
}

TEST_CASE("zero-dimension grids are rejected") {
  REQUIRE_THROWS_AS(build_grid(0, 4, 10.0, 5, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(build_grid(4, 0, 10.0, 5, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(build_grid(4, 4, 10.0, 0, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(build_grid(4, 4, 10.0, 5, 0), std::invalid_argument);
}

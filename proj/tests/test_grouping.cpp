#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "dmfh/grouping.hpp"
#include "dmfh/rng.hpp"

using namespace dmfh;

namespace {

std::vector<double> random_gains(int num_ues, int num_rus, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(1e-12, 1e-6);
  std::vector<double> g(static_cast<std::size_t>(num_ues * num_rus));
  for (double& x : g) x = u(rng);
  return g;
}

}  // namespace

TEST_CASE("select_top_m picks the m strongest RUs") {
  const auto g = random_gains(3, 16, 1);
  const auto subsets = select_top_m(g, 3, 16, 5);
  REQUIRE(subsets.size() == 3);
  for (const ServingSubset& s : subsets) {
    REQUIRE(s.ru_ids.size() == 5);
    for (std::size_t i = 1; i < s.ru_ids.size(); ++i) {
      REQUIRE(g[static_cast<std::size_t>(s.ue_id * 16 + s.ru_ids[i - 1])] >=
              g[static_cast<std::size_t>(s.ue_id * 16 + s.ru_ids[i])]);
    }
    // No excluded RU beats an included one.
    std::set<int> chosen(s.ru_ids.begin(), s.ru_ids.end());
    const double weakest = g[static_cast<std::size_t>(s.ue_id * 16 + s.ru_ids.back())];
    for (int n = 0; n < 16; ++n) {
      if (!chosen.count(n)) REQUIRE(g[static_cast<std::size_t>(s.ue_id * 16 + n)] <= weakest);
    }
  }
  REQUIRE(select_top_m(g, 3, 16, 16)[0].ru_ids.size() == 16);
  REQUIRE_THROWS_AS(select_top_m(g, 3, 16, 17), std::invalid_argument);
}

TEST_CASE("two UEs with identical gains get identical subsets") {
  auto g = random_gains(2, 8, 2);
  for (int n = 0; n < 8; ++n) g[static_cast<std::size_t>(8 + n)] = g[static_cast<std::size_t>(n)];
  const auto subsets = select_top_m(g, 2, 8, 3);
  REQUIRE(subsets[0].ru_ids == subsets[1].ru_ids);
}

TEST_CASE("top-m is invariant under positive scaling") {
  const auto g = random_gains(4, 12, 3);
  auto scaled = g;
  for (double& x : scaled) x *= 1234.5;
  const auto a = select_top_m(g, 4, 12, 5);
  const auto b = select_top_m(scaled, 4, 12, 5);
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].ru_ids == b[i].ru_ids);
}

TEST_CASE("select_alpha prefix rule") {
  // Uniform gains across 4 RUs: cumulative 0.25/0.5/0.75/1.0.
  const std::vector<double> uniform{1.0, 1.0, 1.0, 1.0};
  REQUIRE(select_alpha(uniform, 1, 4, 0.95)[0].ru_ids.size() == 4);
  REQUIRE(select_alpha(uniform, 1, 4, 0.5)[0].ru_ids.size() == 2);
  REQUIRE(select_alpha(uniform, 1, 4, 1e-9)[0].ru_ids.size() == 1);
  REQUIRE(select_alpha(uniform, 1, 4, 1.0)[0].ru_ids.size() == 4);

  // Nested prefixes as alpha grows.
  const auto g = random_gains(2, 10, 4);
  std::size_t prev = 0;
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 1.0}) {
    const auto s = select_alpha(g, 2, 10, alpha);
    REQUIRE(s[0].ru_ids.size() >= prev);
    prev = s[0].ru_ids.size();
  }
}

TEST_CASE("select_aru picks the strongest member, lowest id on ties") {
  const std::vector<double> g{0.1, 0.5, 0.5, 0.2};
  ServingSubset s{0, {1, 2, 3}, -1};
  REQUIRE(select_aru(s, g, 4) == 1);
  ServingSubset single{0, {3}, -1};
  REQUIRE(select_aru(single, g, 4) == 3);
  ServingSubset empty{0, {}, -1};
  REQUIRE_THROWS_AS(select_aru(empty, g, 4), std::invalid_argument);

  // Alternative criterion: fewest hops to the DU.
  const std::vector<int> hops{3, 1, 2, 1, 0};
  ServingSubset h{0, {0, 2, 3}, -1};
  REQUIRE(select_aru(h, g, 4, AruCriterion::kClosestToDu, &hops) == 3);
}

TEST_CASE("to_association round-trips the subsets") {
  std::vector<ServingSubset> subsets{{0, {0, 3}, 0}, {1, {}, -1}, {2, {1, 2, 3}, 2}};
  const auto a = to_association(subsets, 3, 4);
  REQUIRE(a.get(0, 0));
  REQUIRE_FALSE(a.get(0, 1));
  REQUIRE_FALSE(a.get(0, 2));
  REQUIRE(a.get(0, 3));
  REQUIRE(a.row_sum(1) == 0);
  REQUIRE(a.row_sum(2) == 3);
  REQUIRE(a.aru[0] == 0);
  REQUIRE(a.aru[2] == 2);

  const auto g = random_gains(5, 16, 9);
  auto full = select_top_m(g, 5, 16, 5);
  const auto mat = to_association(full, 5, 16);
  for (const ServingSubset& s : full) {
    REQUIRE(mat.row_sum(s.ue_id) == 5);
    for (int id : s.ru_ids) REQUIRE(mat.get(s.ue_id, id));
  }
}

#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "dmfh/metrics.hpp"
#include "dmfh/rng.hpp"

using namespace dmfh;
using Catch::Approx;

TEST_CASE("collect concatenates realizations and computes the drop rate") {
  std::vector<RealizationMetrics> runs(50);
  for (auto& r : runs) {
    r.scenario_id = "s";
    r.total_ues = 8;
    r.sinr_db = {10.0, 12.0};
    r.connection_ratio = {1.0, 0.8};
    r.segment_utilization = {0.0, 0.5};
    r.l2_path_lengths = {1, 2};
  }
  runs[0].dropped_ues = 2;
  const auto batch = collect(runs);
  REQUIRE(batch.realizations == 50);
  REQUIRE(batch.sinr_db.size() == 100);
  REQUIRE(batch.drop_rate == Approx(2.0 / 400.0));

  REQUIRE(collect({}).realizations == 0);

  RealizationMetrics all_dropped;
  all_dropped.scenario_id = "x";
  all_dropped.total_ues = 4;
  all_dropped.dropped_ues = 4;
  const auto empty_batch = collect({all_dropped});
  REQUIRE(empty_batch.sinr_db.empty());
  REQUIRE(empty_batch.drop_rate == 1.0);

  RealizationMetrics other;
  other.scenario_id = "y";
  REQUIRE_THROWS_AS(collect({all_dropped, other}), std::invalid_argument);
}

TEST_CASE("empirical cdf basics") {
  const auto cdf = empirical_cdf(std::vector<double>{2.0, 1.0, 3.0});
  REQUIRE(cdf.size() == 3);
  REQUIRE(cdf[0] == std::pair{1.0, 1.0 / 3});
  REQUIRE(cdf[1] == std::pair{2.0, 2.0 / 3});
  REQUIRE(cdf[2] == std::pair{3.0, 1.0});

  const auto constant = empirical_cdf(std::vector<double>{5.0, 5.0, 5.0});
  REQUIRE(constant.back().second == 1.0);
  for (const auto& [v, f] : constant) REQUIRE(v == 5.0);

  REQUIRE_THROWS_AS(empirical_cdf(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("empirical cdf is monotone and permutation invariant") {
  Rng rng(21);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<double> samples(257);
  for (double& s : samples) s = u(rng);

  auto shuffled = samples;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto a = empirical_cdf(samples);
  const auto b = empirical_cdf(shuffled);
  REQUIRE(a == b);
  for (std::size_t i = 1; i < a.size(); ++i) {
    REQUIRE(a[i].first >= a[i - 1].first);
    REQUIRE(a[i].second > a[i - 1].second);
  }
  REQUIRE(a.back().second == 1.0);
}

TEST_CASE("table output is stable and well-formed") {
  RealizationMetrics r;
  r.scenario_id = "demo";
  r.total_ues = 2;
  r.sinr_db = {3.25, -1.5};
  r.connection_ratio = {1.0, 0.5};
  r.segment_utilization = {0.2};
  r.l2_path_lengths = {2};
  const auto batch = collect({r});

  std::ostringstream a, b;
  write_cdf_table(a, batch);
  write_cdf_table(b, batch);
  REQUIRE(a.str() == b.str());
  REQUIRE(a.str().starts_with("scenario\tmetric\tvalue\tcdf\n"));
  REQUIRE(a.str().find("demo\tsinr_db\t-1.5\t0.5\n") != std::string::npos);

  std::ostringstream summary;
  write_summary(summary, batch);
  REQUIRE(summary.str().find("drop_rate\t0\n") != std::string::npos);
  REQUIRE(summary.str().find("median_sinr_db\t0.875\n") != std::string::npos);
}

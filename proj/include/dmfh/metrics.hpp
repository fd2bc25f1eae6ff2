#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmfh {

// Per-realization samples of the four reported metric families.
struct RealizationMetrics {
  std::string scenario_id;
  std::vector<double> segment_utilization;  // one per segment, end-of-routing
  std::vector<double> sinr_db;              // non-dropped UEs only
  std::vector<double> connection_ratio;     // per UE with nonempty subset
  std::vector<int> l2_path_lengths;         // committed L2 routes
  int dropped_ues = 0;
  int total_ues = 0;
};

struct MetricBatch {
  std::string scenario_id;
  int realizations = 0;
  std::vector<double> segment_utilization;
  std::vector<double> sinr_db;
  std::vector<double> connection_ratio;
  std::vector<int> l2_path_lengths;
  double drop_rate = 0.0;
};

inline MetricBatch collect(const std::vector<RealizationMetrics>& outputs) {
  MetricBatch batch;
  if (outputs.empty()) return batch;
  batch.scenario_id = outputs.front().scenario_id;
  batch.realizations = static_cast<int>(outputs.size());
  int dropped = 0, total = 0;
  for (const RealizationMetrics& r : outputs) {
    if (r.scenario_id != batch.scenario_id) {
      throw std::invalid_argument("collect: mixed scenarios in one batch");
    }
    batch.segment_utilization.insert(batch.segment_utilization.end(),
                                     r.segment_utilization.begin(), r.segment_utilization.end());
    batch.sinr_db.insert(batch.sinr_db.end(), r.sinr_db.begin(), r.sinr_db.end());
    batch.connection_ratio.insert(batch.connection_ratio.end(), r.connection_ratio.begin(),
                                  r.connection_ratio.end());
    batch.l2_path_lengths.insert(batch.l2_path_lengths.end(), r.l2_path_lengths.begin(),
                                 r.l2_path_lengths.end());
    dropped += r.dropped_ues;
    total += r.total_ues;
  }
  batch.drop_rate = total > 0 ? static_cast<double>(dropped) / total : 0.0;
  return batch;
}

// Sorted ascending; cumulative fraction at the i-th sorted value is i/n.
template <typename T>
std::vector<std::pair<double, double>> empirical_cdf(std::vector<T> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_cdf: empty samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  std::vector<std::pair<double, double>> cdf;
  cdf.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    cdf.emplace_back(static_cast<double>(samples[i]), static_cast<double>(i + 1) / n);
  }
  return cdf;
}

namespace detail {

// %.12g keeps tables byte-stable for fixed seeds.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

template <typename T>
void write_family(std::ostream& os, const std::string& scenario, const std::string& name,
                  const std::vector<T>& samples) {
  if (samples.empty()) return;
  for (const auto& [value, frac] : empirical_cdf(samples)) {
    os << scenario << '\t' << name << '\t' << fmt_double(value) << '\t' << fmt_double(frac)
       << '\n';
  }
}

inline double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace detail

// Flat table: scenario id, metric name, value, cumulative fraction.
inline void write_cdf_table(std::ostream& os, const MetricBatch& batch) {
  os << "scenario\tmetric\tvalue\tcdf\n";
  detail::write_family(os, batch.scenario_id, "segment_utilization", batch.segment_utilization);
  detail::write_family(os, batch.scenario_id, "sinr_db", batch.sinr_db);
  detail::write_family(os, batch.scenario_id, "connection_ratio", batch.connection_ratio);
  detail::write_family(os, batch.scenario_id, "l2_path_length", batch.l2_path_lengths);
}

inline void write_summary(std::ostream& os, const MetricBatch& batch) {
  os << "scenario\t" << batch.scenario_id << '\n'
     << "realizations\t" << batch.realizations << '\n'
     << "drop_rate\t" << detail::fmt_double(batch.drop_rate) << '\n'
     << "mean_sinr_db\t" << detail::fmt_double(detail::mean(batch.sinr_db)) << '\n'
     << "median_sinr_db\t" << detail::fmt_double(detail::median(batch.sinr_db)) << '\n'
     << "mean_segment_utilization\t"
     << detail::fmt_double(detail::mean(batch.segment_utilization)) << '\n';
}

}  // namespace dmfh

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dmfh/association.hpp"
#include "dmfh/channel.hpp"

namespace dmfh {

using ComplexMatrix = Eigen::MatrixXcd;

// Channel masked by the association matrix; rows of dropped UEs are zero.
struct EffectiveChannel {
  ComplexMatrix h_eff;          // K x N
  std::vector<int> active_ues;  // non-dropped UE ids, ascending
};

// N x K precoding weights with per-RU transmit power accounting.
struct PrecoderSet {
  ComplexMatrix w;                     // N x K; zero columns for dropped UEs
  std::vector<double> per_ru_tx_power; // watts, after normalization
  double scale = 0.0;                  // common scalar applied to the raw pinv
  double zf_residual = 0.0;            // max |h_eff_active * w_raw - I|
};

inline EffectiveChannel effective_channel(const ChannelState& channel,
                                          const AssociationMatrix& assoc) {
  if (assoc.num_ues != channel.num_ues || assoc.num_rus != channel.num_rus) {
    throw std::invalid_argument("effective_channel: shape mismatch");
  }
  EffectiveChannel eff;
  eff.h_eff = ComplexMatrix::Zero(channel.num_ues, channel.num_rus);
  for (int k = 0; k < channel.num_ues; ++k) {
    for (int n = 0; n < channel.num_rus; ++n) {
      if (assoc.get(k, n)) eff.h_eff(k, n) = channel.gain(k, n);
    }
    if (!assoc.is_dropped(k) && assoc.row_sum(k) > 0) eff.active_ues.push_back(k);
  }
  return eff;
}

// Moore-Penrose pseudo-inverse with a relative singular-value cutoff.
inline ComplexMatrix pseudo_inverse(const ComplexMatrix& m, double rel_cutoff = 1e-10) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? rel_cutoff * sv(0) : 0.0;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

// Centralized zero-forcing on the active rows: W_active = h_eff_active^+.
// Returns the full N x K matrix with zero columns for inactive UEs.
inline ComplexMatrix czf(const EffectiveChannel& eff) {
  const auto num_rus = eff.h_eff.cols();
  const auto num_ues = eff.h_eff.rows();
  ComplexMatrix w = ComplexMatrix::Zero(num_rus, num_ues);
  const int active = static_cast<int>(eff.active_ues.size());
  if (active == 0) return w;

  ComplexMatrix h_active(active, num_rus);
  for (int i = 0; i < active; ++i) h_active.row(i) = eff.h_eff.row(eff.active_ues[i]);
  const ComplexMatrix w_active = pseudo_inverse(h_active);
  for (int i = 0; i < active; ++i) w.col(eff.active_ues[i]) = w_active.col(i);
  return w;
}

// Scales the whole weight matrix by one common scalar so the most loaded RU
// transmits exactly per_ru_limit_w. The common scalar keeps the ZF nulls.
inline PrecoderSet normalize_power(const ComplexMatrix& raw, double per_ru_limit_w) {
  PrecoderSet set;
  double peak = 0.0;
  for (Eigen::Index n = 0; n < raw.rows(); ++n) {
    peak = std::max(peak, raw.row(n).squaredNorm());
  }
  if (peak == 0.0) {
    set.w = raw;
    set.per_ru_tx_power.assign(static_cast<std::size_t>(raw.rows()), 0.0);
    return set;
  }
  set.scale = std::sqrt(per_ru_limit_w / peak);
  set.w = raw * set.scale;
  set.per_ru_tx_power.reserve(static_cast<std::size_t>(raw.rows()));
  for (Eigen::Index n = 0; n < set.w.rows(); ++n) {
    set.per_ru_tx_power.push_back(set.w.row(n).squaredNorm());
  }
  return set;
}

// Per-UE SINR per the received-signal model: UE k's own channel row against
// every active UE's precoder column. Dropped UEs get sinr 0 and served=false.
struct SinrReport {
  std::vector<double> sinr_linear;  // per UE; 0 for dropped
  std::vector<char> served;
};

inline SinrReport sinr(const ChannelState& channel, const PrecoderSet& precoders,
                       const AssociationMatrix& assoc) {
  SinrReport report;
  const int num_ues = channel.num_ues;
  report.sinr_linear.assign(static_cast<std::size_t>(num_ues), 0.0);
  report.served.assign(static_cast<std::size_t>(num_ues), 0);

  std::vector<int> active;
  for (int k = 0; k < num_ues; ++k) {
    if (!assoc.is_dropped(k) && assoc.row_sum(k) > 0) active.push_back(k);
  }

  for (int k : active) {
    std::complex<double> sig{};
    for (int n = 0; n < channel.num_rus; ++n) sig += channel.gain(k, n) * precoders.w(n, k);
    double interference = 0.0;
    for (int j : active) {
      if (j == k) continue;
      std::complex<double> leak{};
      for (int n = 0; n < channel.num_rus; ++n) leak += channel.gain(k, n) * precoders.w(n, j);
      interference += std::norm(leak);
    }
    report.sinr_linear[static_cast<std::size_t>(k)] =
        std::norm(sig) / (interference + channel.noise_power_w);
    report.served[static_cast<std::size_t>(k)] = 1;
  }
  return report;
}

// max |h_eff_active * w_active - c*I| for diagnostics; c is the common
// post-normalization scalar.
inline double zf_residual(const EffectiveChannel& eff, const PrecoderSet& precoders) {
  const int active = static_cast<int>(eff.active_ues.size());
  if (active == 0) return 0.0;
  ComplexMatrix h_active(active, eff.h_eff.cols());
  ComplexMatrix w_active(eff.h_eff.cols(), active);
  for (int i = 0; i < active; ++i) {
    h_active.row(i) = eff.h_eff.row(eff.active_ues[i]);
    w_active.col(i) = precoders.w.col(eff.active_ues[i]);
  }
  const ComplexMatrix product = h_active * w_active;
  const ComplexMatrix target =
      ComplexMatrix::Identity(active, active) * precoders.scale;
  return (product - target).cwiseAbs().maxCoeff();
}

}  // namespace dmfh

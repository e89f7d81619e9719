#include "svb/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "svb/butterworth.hpp"

namespace svb {

JakesProcess::JakesProcess(double doppler, std::mt19937_64& rng,
                           int oscillators) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  omega_.resize(oscillators);
  phase_.resize(oscillators);
  const double wd = 2.0 * std::numbers::pi * doppler;
  for (int m = 0; m < oscillators; ++m) {
    omega_[m] = wd * std::cos(angle(rng));
    phase_[m] = angle(rng);
  }
  amplitude_ = std::sqrt(2.0 / oscillators);
}

double JakesProcess::at(long n) const {
  double v = 0.0;
  for (size_t m = 0; m < omega_.size(); ++m)
    v += std::cos(omega_[m] * static_cast<double>(n) + phase_[m]);
  return amplitude_ * v;
}

ChannelTrajectory gen_channel(const ChannelParams& params,
                              std::mt19937_64& rng) {
  if (params.sparsity < 1 || params.sparsity > params.n_taps)
    throw std::invalid_argument("gen_channel: sparsity outside [1, n_taps]");
  if (params.packet_len < 1)
    throw std::invalid_argument("gen_channel: empty packet");

  // support: draw sparsity indices without replacement
  std::vector<int> indices(params.n_taps);
  std::iota(indices.begin(), indices.end(), 0);
  for (int k = 0; k < params.sparsity; ++k) {
    std::uniform_int_distribution<int> pick(k, params.n_taps - 1);
    std::swap(indices[k], indices[pick(rng)]);
  }
  ChannelTrajectory traj;
  traj.support.assign(indices.begin(), indices.begin() + params.sparsity);
  std::sort(traj.support.begin(), traj.support.end());

  traj.taps = Eigen::MatrixXd::Zero(params.n_taps, params.packet_len);
  for (int tap : traj.support) {
    JakesProcess proc(params.doppler, rng);
    for (int n = 0; n < params.packet_len; ++n) traj.taps(tap, n) = proc.at(n);
  }

  if (params.tracking_step >= 0) {
    if (params.sparsity == params.n_taps)
      throw std::invalid_argument("gen_channel: no free tap for the tracking event");
    std::vector<int> off;
    for (int i = 0; i < params.n_taps; ++i)
      if (!std::binary_search(traj.support.begin(), traj.support.end(), i))
        off.push_back(i);
    std::uniform_int_distribution<size_t> pick(0, off.size() - 1);
    traj.added_tap = off[pick(rng)];
    traj.added_at = params.tracking_step;
    JakesProcess proc(params.doppler, rng);
    for (int n = params.tracking_step; n < params.packet_len; ++n)
      traj.taps(traj.added_tap, n) = proc.at(n - params.tracking_step);
  }
  return traj;
}

std::vector<double> gen_scalar_input(InputKind kind, int length,
                                     std::mt19937_64& rng) {
  std::vector<double> u(length);
  switch (kind) {
    case InputKind::Bpsk: {
      std::uniform_int_distribution<int> bit(0, 1);
      for (double& v : u) v = bit(rng) == 0 ? -1.0 : 1.0;
      break;
    }
    case InputKind::ButterworthColored: {
      IirFilter lp = butterworth_lowpass(5, 0.25);
      const double scale = 1.0 / std::sqrt(lp.power_gain());
      std::normal_distribution<double> gauss(0.0, 1.0);
      constexpr int kWarmup = 500;
      for (int k = 0; k < kWarmup; ++k) lp.process(gauss(rng));
      for (double& v : u) v = scale * lp.process(gauss(rng));
      break;
    }
  }
  return u;
}

}  // namespace svb

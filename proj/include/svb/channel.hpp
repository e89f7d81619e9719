#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

namespace svb {

enum class InputKind { Bpsk, ButterworthColored };

/// One sum-of-sinusoids Rayleigh fading process: 16 oscillators with uniform
/// random arrival angles and phases, scaled to unit average power over the
/// ensemble. The autocorrelation approximates J0(2 pi doppler dn).
class JakesProcess {
 public:
  JakesProcess(double doppler, std::mt19937_64& rng, int oscillators = 16);

  double at(long n) const;

 private:
  std::vector<double> omega_;  // per-oscillator angular rate, rad/sample
  std::vector<double> phase_;
  double amplitude_;
};

struct ChannelParams {
  int n_taps = 64;
  int sparsity = 8;           // active taps
  double doppler = 5e-5;      // normalized f_d T_s
  int packet_len = 1000;
  int tracking_step = -1;     // >= 0: one extra tap switches on at this step
};

/// Ground-truth time-varying tap matrix plus support metadata. Column n of
/// taps holds w(n); off-support rows are identically zero until a tracking
/// event activates one of them.
struct ChannelTrajectory {
  Eigen::MatrixXd taps;       // n_taps x packet_len
  std::vector<int> support;   // initial support, ascending
  int added_tap = -1;
  int added_at = -1;

  Eigen::VectorXd at(int n) const { return taps.col(n); }
};

ChannelTrajectory gen_channel(const ChannelParams& params,
                              std::mt19937_64& rng);

/// Scalar input stream of the requested length: i.i.d. +/-1 symbols, or unit
/// Gaussian noise colored by a 5th-order Butterworth lowpass with cutoff 1/4
/// the sampling rate and rescaled to unit average power.
std::vector<double> gen_scalar_input(InputKind kind, int length,
                                     std::mt19937_64& rng);

}  // namespace svb

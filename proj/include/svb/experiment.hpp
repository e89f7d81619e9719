#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svb/channel.hpp"

namespace svb {

enum class EstimatorKind { Rls, Garls, CcdLasso, AsvbS, AsvbL, AsvbMpl };

const char* estimator_kind_name(EstimatorKind kind);
std::optional<EstimatorKind> parse_estimator_kind(const std::string& name);
bool is_bayesian(EstimatorKind kind);

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::Rls;
  std::string label;                   // defaults to the kind name
  std::optional<double> lambda;        // overrides the experiment lambda
  std::optional<double> tau;           // ccd_lasso only; empty = cross-validate

  std::string effective_label() const {
    return label.empty() ? estimator_kind_name(kind) : label;
  }
};

/// Declarative description of one benchmark scenario.
struct ExperimentConfig {
  int n_taps = 64;
  int sparsity = 8;
  double doppler = 5e-5;
  double lambda = 0.99;
  int packet_len = 1000;
  int realizations = 200;
  double snr_db = 15.0;
  InputKind input = InputKind::Bpsk;
  std::optional<int> tracking_event;   // step at which one extra tap appears
  std::uint64_t seed = 1;
  std::vector<EstimatorSpec> estimators;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;

  /// Noise variance implied by the SNR: the signal power is sparsity * 1
  /// (unit-power taps, unit-power input).
  double noise_variance() const;
};

struct EstimatorResult {
  EstimatorSpec spec;                  // tau resolved if it was cross-validated
  std::vector<double> nmse_db;         // per time index, ensemble ratio
  std::vector<double> noise_var_est;   // mean 1/beta(n); Bayesian kinds only
  double steady_state_db = 0.0;        // mean over the last 20% of the packet
  int convergence_step = -1;           // first step within 1 dB of the floor
  int diverged_realizations = 0;
  long first_divergence_step = -1;
  double added_tap_mse = 0.0;          // post-event window; tracking runs only
  double mean_step_seconds = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;             // with estimator taus resolved
  std::vector<EstimatorResult> estimators;
  double true_noise_var = 0.0;
  double wall_clock_seconds = 0.0;
  // realization-0 trajectories of the event tap, for tracking scenarios
  std::vector<double> tap_truth;
  std::vector<std::vector<double>> tap_estimates;  // one per estimator
};

/// Run the full ensemble: per realization draw a channel, an input stream and
/// noise, stream the samples through every estimator and accumulate the NMSE
/// numerator and denominator separately. Realizations are distributed over a
/// thread pool and merged in a fixed order, so results are bit-identical for
/// a given config and seed regardless of thread count. threads = 0 picks the
/// hardware concurrency.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                int threads = 0);

/// Ensemble NMSE in dB for a single pair of trajectories (columns = time).
/// Throws std::domain_error if the truth has zero energy at some step.
std::vector<double> nmse_curve_db(const Eigen::MatrixXd& truth,
                                  const Eigen::MatrixXd& estimate);

/// Mean of the last 20% of a curve.
double steady_state_db(const std::vector<double>& curve);

/// First index at which the curve drops to `level_db` or below; -1 if never.
int first_step_at_or_below(const std::vector<double>& curve, double level_db);

}  // namespace svb

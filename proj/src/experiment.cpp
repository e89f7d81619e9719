#include "svb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <thread>

#include "svb/adaptive.hpp"
#include "svb/baselines.hpp"

namespace svb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 realization_rng(std::uint64_t seed, int realization,
                                std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(realization),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Type-erased estimator front end for the benchmark loop.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual void step(const Eigen::VectorXd& x, double y) = 0;
  virtual const Eigen::VectorXd& weights() const = 0;
  virtual double noise_variance() const { return 0.0; }
};

class AsvbRunner : public Runner {
 public:
  AsvbRunner(int dim, Variant variant, const Hyperparams& hyper)
      : filter_(dim, variant, hyper) {}
  void step(const Eigen::VectorXd& x, double y) override { filter_.step(x, y); }
  const Eigen::VectorXd& weights() const override { return filter_.weights(); }
  double noise_variance() const override { return filter_.noise_variance(); }

 private:
  AdaptiveSvb filter_;
};

class RlsRunner : public Runner {
 public:
  RlsRunner(int dim, double lambda) : filter_(dim, lambda) {}
  RlsRunner(int dim, double lambda, std::vector<int> support)
      : filter_(dim, lambda, std::move(support)) {}
  void step(const Eigen::VectorXd& x, double y) override { filter_.step(x, y); }
  const Eigen::VectorXd& weights() const override { return filter_.weights(); }

 private:
  RlsFilter filter_;
};

class LassoRunner : public Runner {
 public:
  LassoRunner(int dim, double lambda, double tau) : filter_(dim, lambda, tau) {}
  void step(const Eigen::VectorXd& x, double y) override { filter_.step(x, y); }
  const Eigen::VectorXd& weights() const override { return filter_.weights(); }

 private:
  CcdLasso filter_;
};

std::unique_ptr<Runner> make_runner(const EstimatorSpec& spec,
                                    const ExperimentConfig& config,
                                    const ChannelTrajectory& channel) {
  const int dim = config.n_taps;
  const double lambda = spec.lambda.value_or(config.lambda);
  Hyperparams hyper;
  hyper.lambda = lambda;
  switch (spec.kind) {
    case EstimatorKind::Rls:
      return std::make_unique<RlsRunner>(dim, lambda);
    case EstimatorKind::Garls: {
      std::vector<int> support = channel.support;
      if (channel.added_tap >= 0) {
        support.push_back(channel.added_tap);
        std::sort(support.begin(), support.end());
      }
      return std::make_unique<RlsRunner>(dim, lambda, std::move(support));
    }
    case EstimatorKind::CcdLasso:
      return std::make_unique<LassoRunner>(dim, lambda, spec.tau.value_or(0.0));
    case EstimatorKind::AsvbS:
      return std::make_unique<AsvbRunner>(dim, Variant::StudentT, hyper);
    case EstimatorKind::AsvbL:
      return std::make_unique<AsvbRunner>(dim, Variant::Laplace, hyper);
    case EstimatorKind::AsvbMpl:
      return std::make_unique<AsvbRunner>(dim, Variant::MultiParamLaplace, hyper);
  }
  throw std::logic_error("make_runner: unknown estimator kind");
}

struct RealizationSlot {
  std::vector<double> den;                            // ||w(n)||^2
  std::vector<std::vector<double>> num;               // per estimator
  std::vector<std::vector<double>> noise_var;         // Bayesian estimators
  std::vector<long> diverged_at;                      // -1 if finite throughout
  std::vector<double> step_seconds;
  std::vector<double> tap_truth;                      // realization 0 only
  std::vector<std::vector<double>> tap_estimates;
  std::vector<double> tap_sqerr_post;                 // per estimator
};

void run_realization(const ExperimentConfig& config, int r,
                     RealizationSlot& slot) {
  const int dim = config.n_taps;
  const int len = config.packet_len;
  const auto n_est = config.estimators.size();

  auto rng = realization_rng(config.seed, r, 0);

  ChannelParams cp;
  cp.n_taps = dim;
  cp.sparsity = config.sparsity;
  cp.doppler = config.doppler;
  cp.packet_len = len;
  cp.tracking_step = config.tracking_event.value_or(-1);
  const ChannelTrajectory channel = gen_channel(cp, rng);

  // u(k) for k = -(dim-1) .. len-1, so x(0) has a full delay line
  const std::vector<double> u =
      gen_scalar_input(config.input, len + dim - 1, rng);

  const double sigma = std::sqrt(config.noise_variance());
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> noise(len);
  for (double& v : noise) v = sigma * gauss(rng);

  std::vector<std::unique_ptr<Runner>> runners;
  runners.reserve(n_est);
  for (const auto& spec : config.estimators)
    runners.push_back(make_runner(spec, config, channel));

  slot.den.assign(len, 0.0);
  slot.num.assign(n_est, std::vector<double>(len, 0.0));
  slot.noise_var.assign(n_est, {});
  slot.diverged_at.assign(n_est, -1);
  slot.step_seconds.assign(n_est, 0.0);
  slot.tap_sqerr_post.assign(n_est, 0.0);
  for (size_t e = 0; e < n_est; ++e)
    if (is_bayesian(config.estimators[e].kind))
      slot.noise_var[e].assign(len, 0.0);

  const bool tracking = channel.added_tap >= 0;
  if (tracking && r == 0) {
    slot.tap_truth.assign(len, 0.0);
    slot.tap_estimates.assign(n_est, std::vector<double>(len, 0.0));
  }

  Eigen::VectorXd x(dim);
  for (int n = 0; n < len; ++n) {
    for (int i = 0; i < dim; ++i) x[i] = u[n + dim - 1 - i];
    const Eigen::VectorXd w_true = channel.at(n);
    const double y = x.dot(w_true) + noise[n];
    slot.den[n] = w_true.squaredNorm();

    for (size_t e = 0; e < n_est; ++e) {
      const auto t0 = std::chrono::steady_clock::now();
      runners[e]->step(x, y);
      slot.step_seconds[e] +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();

      const Eigen::VectorXd& w_hat = runners[e]->weights();
      double err = (w_true - w_hat).squaredNorm();
      if (!std::isfinite(err)) {
        err = kInf;
        if (slot.diverged_at[e] < 0) slot.diverged_at[e] = n;
      }
      slot.num[e][n] = err;
      if (!slot.noise_var[e].empty())
        slot.noise_var[e][n] = runners[e]->noise_variance();
      if (tracking) {
        const double tap_err =
            w_hat[channel.added_tap] - w_true[channel.added_tap];
        if (n >= channel.added_at)
          slot.tap_sqerr_post[e] +=
              std::isfinite(tap_err) ? tap_err * tap_err : kInf;
        if (r == 0) slot.tap_estimates[e][n] = w_hat[channel.added_tap];
      }
    }
    if (tracking && r == 0) slot.tap_truth[n] = w_true[channel.added_tap];
  }
}

double resolve_lasso_tau(const ExperimentConfig& config,
                         const EstimatorSpec& spec, int threads) {
  // 15-point logarithmic grid spanning [1e-4, 1e1] * sqrt(log N), scored by
  // steady-state NMSE on a small pilot ensemble.
  const double scale = std::sqrt(std::log(static_cast<double>(config.n_taps)));
  double best_tau = 0.0;
  double best_score = kInf;
  for (int g = 0; g < 15; ++g) {
    const double tau =
        std::pow(10.0, -4.0 + 5.0 * static_cast<double>(g) / 14.0) * scale;
    ExperimentConfig pilot = config;
    pilot.realizations = std::min(config.realizations, 4);
    pilot.seed = splitmix64(config.seed ^ 0xccdccdccdccdccdcULL);
    EstimatorSpec trial = spec;
    trial.tau = tau;
    pilot.estimators = {trial};
    const ExperimentResult res = run_experiment(pilot, threads);
    const double score = res.estimators[0].steady_state_db;
    if (score < best_score) {
      best_score = score;
      best_tau = tau;
    }
  }
  return best_tau;
}

}  // namespace

const char* estimator_kind_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::Rls: return "rls";
    case EstimatorKind::Garls: return "garls";
    case EstimatorKind::CcdLasso: return "ccd_lasso";
    case EstimatorKind::AsvbS: return "asvb_s";
    case EstimatorKind::AsvbL: return "asvb_l";
    case EstimatorKind::AsvbMpl: return "asvb_mpl";
  }
  return "?";
}

std::optional<EstimatorKind> parse_estimator_kind(const std::string& name) {
  if (name == "rls") return EstimatorKind::Rls;
  if (name == "garls") return EstimatorKind::Garls;
  if (name == "ccd_lasso") return EstimatorKind::CcdLasso;
  if (name == "asvb_s") return EstimatorKind::AsvbS;
  if (name == "asvb_l") return EstimatorKind::AsvbL;
  if (name == "asvb_mpl") return EstimatorKind::AsvbMpl;
  return std::nullopt;
}

bool is_bayesian(EstimatorKind kind) {
  return kind == EstimatorKind::AsvbS || kind == EstimatorKind::AsvbL ||
         kind == EstimatorKind::AsvbMpl;
}

void ExperimentConfig::validate() const {
  if (n_taps < 1) throw std::invalid_argument("config: n_taps must be >= 1");
  if (sparsity < 1 || sparsity > n_taps)
    throw std::invalid_argument("config: sparsity outside [1, n_taps]");
  if (packet_len < 1) throw std::invalid_argument("config: packet_len must be >= 1");
  if (realizations < 1)
    throw std::invalid_argument("config: realizations must be >= 1");
  if (!(lambda > 0.0) || lambda > 1.0)
    throw std::invalid_argument("config: lambda outside (0, 1]");
  if (doppler < 0.0) throw std::invalid_argument("config: negative doppler");
  if (tracking_event &&
      (*tracking_event < 0 || *tracking_event >= packet_len))
    throw std::invalid_argument("config: tracking_event outside the packet");
  if (estimators.empty())
    throw std::invalid_argument("config: no estimators configured");
  for (const auto& e : estimators) {
    if (e.lambda && (!(*e.lambda > 0.0) || *e.lambda > 1.0))
      throw std::invalid_argument("config: estimator lambda outside (0, 1]");
    if (e.tau && *e.tau < 0.0)
      throw std::invalid_argument("config: negative tau");
  }
}

double ExperimentConfig::noise_variance() const {
  return static_cast<double>(sparsity) / std::pow(10.0, snr_db / 10.0);
}

std::vector<double> nmse_curve_db(const Eigen::MatrixXd& truth,
                                  const Eigen::MatrixXd& estimate) {
  if (truth.rows() != estimate.rows() || truth.cols() != estimate.cols())
    throw std::invalid_argument("nmse_curve_db: shape mismatch");
  std::vector<double> curve(truth.cols());
  for (Eigen::Index n = 0; n < truth.cols(); ++n) {
    const double den = truth.col(n).squaredNorm();
    if (!(den > 0.0))
      throw std::domain_error("nmse_curve_db: zero-energy truth");
    curve[n] = 10.0 * std::log10((truth.col(n) - estimate.col(n)).squaredNorm() / den);
  }
  return curve;
}

double steady_state_db(const std::vector<double>& curve) {
  const auto len = curve.size();
  const size_t start = len - std::max<size_t>(1, len / 5);
  double sum = 0.0;
  for (size_t n = start; n < len; ++n) sum += curve[n];
  return sum / static_cast<double>(len - start);
}

int first_step_at_or_below(const std::vector<double>& curve, double level_db) {
  for (size_t n = 0; n < curve.size(); ++n)
    if (curve[n] <= level_db) return static_cast<int>(n);
  return -1;
}

ExperimentResult run_experiment(const ExperimentConfig& config_in,
                                int threads) {
  ExperimentConfig config = config_in;
  config.validate();
  const auto t_begin = std::chrono::steady_clock::now();

  for (auto& spec : config.estimators)
    if (spec.kind == EstimatorKind::CcdLasso && !spec.tau)
      spec.tau = resolve_lasso_tau(config, spec, threads);

  const int reals = config.realizations;
  const int len = config.packet_len;
  const auto n_est = config.estimators.size();

  std::vector<RealizationSlot> slots(reals);
  int pool = threads > 0 ? threads
                         : static_cast<int>(std::thread::hardware_concurrency());
  pool = std::clamp(pool, 1, reals);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= reals) return;
      run_realization(config, r, slots[r]);
    }
  };
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> team;
    team.reserve(pool);
    for (int t = 0; t < pool; ++t) team.emplace_back(worker);
    for (auto& t : team) t.join();
  }

  // fixed-order reduction keeps the output independent of scheduling
  ExperimentResult result;
  result.config = config;
  result.true_noise_var = config.noise_variance();
  result.estimators.resize(n_est);

  std::vector<double> den(len, 0.0);
  for (int r = 0; r < reals; ++r)
    for (int n = 0; n < len; ++n) den[n] += slots[r].den[n];

  const bool tracking = config.tracking_event.has_value();
  const int post_from = tracking ? *config.tracking_event : 0;
  const long post_count =
      tracking ? static_cast<long>(len - post_from) * reals : 0;

  for (size_t e = 0; e < n_est; ++e) {
    EstimatorResult& er = result.estimators[e];
    er.spec = config.estimators[e];

    std::vector<double> num(len, 0.0);
    double tap_sqerr = 0.0;
    double seconds = 0.0;
    const bool bayes = is_bayesian(er.spec.kind);
    if (bayes) er.noise_var_est.assign(len, 0.0);
    for (int r = 0; r < reals; ++r) {
      const RealizationSlot& slot = slots[r];
      for (int n = 0; n < len; ++n) num[n] += slot.num[e][n];
      if (bayes)
        for (int n = 0; n < len; ++n)
          er.noise_var_est[n] += slot.noise_var[e][n];
      if (slot.diverged_at[e] >= 0) {
        ++er.diverged_realizations;
        if (er.first_divergence_step < 0 ||
            slot.diverged_at[e] < er.first_divergence_step)
          er.first_divergence_step = slot.diverged_at[e];
      }
      tap_sqerr += slot.tap_sqerr_post[e];
      seconds += slot.step_seconds[e];
    }
    if (bayes)
      for (double& v : er.noise_var_est) v /= reals;

    er.nmse_db.resize(len);
    for (int n = 0; n < len; ++n)
      er.nmse_db[n] = 10.0 * std::log10(num[n] / den[n]);
    er.steady_state_db = steady_state_db(er.nmse_db);
    er.convergence_step =
        first_step_at_or_below(er.nmse_db, er.steady_state_db + 1.0);
    er.added_tap_mse =
        post_count > 0 ? tap_sqerr / static_cast<double>(post_count) : 0.0;
    er.mean_step_seconds = seconds / (static_cast<double>(len) * reals);
  }

  if (tracking) {
    result.tap_truth = slots[0].tap_truth;
    result.tap_estimates = slots[0].tap_estimates;
  }
  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin)
          .count();
  return result;
}

}  // namespace svb

#include "svb/butterworth.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace svb {

namespace {

using cplx = std::complex<double>;

// Monic polynomial coefficients (descending powers) from its roots.
std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> coeffs{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> next(coeffs.size() + 1, 0.0);
    for (size_t k = 0; k < coeffs.size(); ++k) {
      next[k] += coeffs[k];
      next[k + 1] -= coeffs[k] * r;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

IirFilter::IirFilter(std::vector<double> b, std::vector<double> a)
    : b_(std::move(b)), a_(std::move(a)) {
  if (a_.empty() || a_[0] == 0.0)
    throw std::invalid_argument("IirFilter: a[0] must be nonzero");
  for (double& v : b_) v /= a_[0];
  for (double& v : a_) v /= a_[0];
  const size_t n = std::max(b_.size(), a_.size());
  b_.resize(n, 0.0);
  a_.resize(n, 0.0);
  state_.assign(n > 0 ? n - 1 : 0, 0.0);
}

void IirFilter::reset() { state_.assign(state_.size(), 0.0); }

double IirFilter::process(double x) {
  const size_t n = b_.size();
  const double y = b_[0] * x + (n > 1 ? state_[0] : 0.0);
  for (size_t k = 1; k < n; ++k) {
    const double carry = k < n - 1 ? state_[k] : 0.0;
    state_[k - 1] = b_[k] * x - a_[k] * y + carry;
  }
  return y;
}

double IirFilter::magnitude(double f) const {
  const double w = 2.0 * std::numbers::pi * f;
  cplx num = 0.0, den = 0.0;
  for (size_t k = 0; k < b_.size(); ++k) {
    const cplx e = std::exp(cplx(0.0, -w * static_cast<double>(k)));
    num += b_[k] * e;
    den += a_[k] * e;
  }
  return std::abs(num / den);
}

double IirFilter::power_gain(int impulse_len) const {
  IirFilter copy = *this;
  copy.reset();
  double energy = 0.0;
  for (int k = 0; k < impulse_len; ++k) {
    const double h = copy.process(k == 0 ? 1.0 : 0.0);
    energy += h * h;
  }
  return energy;
}

IirFilter butterworth_lowpass(int order, double cutoff) {
  if (order < 1) throw std::invalid_argument("butterworth_lowpass: order < 1");
  if (!(cutoff > 0.0) || !(cutoff < 0.5))
    throw std::invalid_argument("butterworth_lowpass: cutoff outside (0, 0.5)");

  const double warped = std::tan(std::numbers::pi * cutoff);

  // Analog prototype poles on the left unit semicircle, scaled by the
  // prewarped cutoff, then mapped with s = (z - 1) / (z + 1).
  std::vector<cplx> zpoles;
  zpoles.reserve(order);
  for (int k = 0; k < order; ++k) {
    const double theta =
        std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
    const cplx s = warped * std::exp(cplx(0.0, theta));
    zpoles.push_back((1.0 + s) / (1.0 - s));
  }
  const std::vector<cplx> zzeros(order, cplx(-1.0, 0.0));

  const std::vector<cplx> bc = poly_from_roots(zzeros);
  const std::vector<cplx> ac = poly_from_roots(zpoles);

  std::vector<double> b(bc.size()), a(ac.size());
  for (size_t k = 0; k < bc.size(); ++k) b[k] = bc[k].real();
  for (size_t k = 0; k < ac.size(); ++k) a[k] = ac[k].real();

  // unity gain at DC
  double bsum = 0.0, asum = 0.0;
  for (double v : b) bsum += v;
  for (double v : a) asum += v;
  const double g = asum / bsum;
  for (double& v : b) v *= g;

  return IirFilter(std::move(b), std::move(a));
}

}  // namespace svb

#pragma once

#include <vector>

namespace svb {

/// Direct form II transposed IIR filter. a[0] is normalized to 1.
class IirFilter {
 public:
  IirFilter(std::vector<double> b, std::vector<double> a);

  double process(double x);
  void reset();

  const std::vector<double>& numerator() const { return b_; }
  const std::vector<double>& denominator() const { return a_; }

  /// |H(e^{j 2 pi f})| with f in cycles/sample.
  double magnitude(double f) const;

  /// Output power for unit-variance white input, estimated from the impulse
  /// response energy.
  double power_gain(int impulse_len = 4096) const;

 private:
  std::vector<double> b_, a_, state_;
};

/// Digital Butterworth lowpass via bilinear transform of the analog
/// prototype. cutoff is the -3 dB frequency in cycles/sample, in (0, 0.5).
IirFilter butterworth_lowpass(int order, double cutoff);

}  // namespace svb

#include "cifb/signals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cifb/errors.hpp"

namespace cifb {

namespace {

void check_common(const SignalSpec& spec, std::size_t tones) {
  if (spec.freqs.size() != tones)
    throw InvalidSpec("expected " + std::to_string(tones) + " tone(s), got " +
                      std::to_string(spec.freqs.size()));
  for (double f : spec.freqs)
    if (!(f > 0.0 && f < 0.5))
      throw InvalidSpec("relative frequency " + std::to_string(f) + " outside (0, 0.5)");
  if (spec.samples < 1) throw InvalidSpec("sample count must be positive");
}

}  // namespace

double round_half_away(double v) { return std::copysign(std::floor(std::abs(v) + 0.5), v); }

Eigen::ArrayXd sine(const SignalSpec& spec) {
  check_common(spec, 1);
  const double omega = 2.0 * std::numbers::pi * spec.freqs[0];
  Eigen::ArrayXd x(spec.samples);
  for (Eigen::Index n = 1; n <= spec.samples; ++n) {
    double v = spec.amplitude * std::sin(omega * static_cast<double>(n));
    x(n - 1) = spec.integer_rounded ? round_half_away(v) : v;
  }
  return x;
}

Eigen::ArrayXd two_tone(const SignalSpec& spec) {
  check_common(spec, 2);
  if (spec.freqs[0] == spec.freqs[1]) throw InvalidSpec("two-tone stimulus needs distinct tones");
  const double w1 = 2.0 * std::numbers::pi * spec.freqs[0];
  const double w2 = 2.0 * std::numbers::pi * spec.freqs[1];
  Eigen::ArrayXd x(spec.samples);
  for (Eigen::Index n = 1; n <= spec.samples; ++n) {
    const double t = static_cast<double>(n);
    double v = spec.amplitude * (std::sin(w1 * t) + std::sin(w2 * t));
    x(n - 1) = spec.integer_rounded ? round_half_away(v) : v;
  }
  return x;
}

Eigen::ArrayXd blackman_harris(Eigen::Index N) {
  if (N < 4) throw WindowTooShort("Blackman-Harris window needs N >= 4");
  constexpr double a0 = 0.35875, a1 = 0.48829, a2 = 0.14128, a3 = 0.01168;
  const double den = static_cast<double>(N - 1);
  Eigen::ArrayXd w(N);
  // Evaluate the first half only and mirror it: the cosine arguments at n and
  // N-1-n round differently, so direct evaluation is not bitwise symmetric.
  const double c1 = 2.0 * std::numbers::pi;
  const double c2 = 4.0 * std::numbers::pi;
  const double c3 = 6.0 * std::numbers::pi;
  for (Eigen::Index n = 0; n < (N + 1) / 2; ++n) {
    const double t = static_cast<double>(n);
    const double v = a0 - a1 * std::cos(c1 * t / den) + a2 * std::cos(c2 * t / den) -
                     a3 * std::cos(c3 * t / den);
    w(n) = v;
    w(N - 1 - n) = v;
  }
  return w;
}

Eigen::Matrix<Int128, Eigen::Dynamic, 1> to_exact(const Eigen::ArrayXd& x) {
  Eigen::Matrix<Int128, Eigen::Dynamic, 1> r(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) r(i) = Int128::from_double(x(i));
  return r;
}

}  // namespace cifb

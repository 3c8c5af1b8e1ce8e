#pragma once

#include <Eigen/Core>
#include <vector>

#include "cifb/int128.hpp"

namespace cifb {

// Stimulus description: amplitude, one or two relative frequencies
// (F = f/fs, cycles per sample), sample count, optional rounding to integers.
// Samples are indexed from n = 1.
struct SignalSpec {
  double amplitude = 0.0;
  std::vector<double> freqs;  // one or two entries, each in (0, 0.5)
  Eigen::Index samples = 0;
  bool integer_rounded = false;
};

// round-half-away-from-zero, the reference listing's rounding rule.
double round_half_away(double v);

// x(n) = A sin(2 pi F n), n = 1..NoS; rounded per spec.integer_rounded.
Eigen::ArrayXd sine(const SignalSpec& spec);

// x(n) = A (sin(2 pi F1 n) + sin(2 pi F2 n)), two distinct tones.
Eigen::ArrayXd two_tone(const SignalSpec& spec);

// 4-term Blackman-Harris window (minimum-sidelobe coefficients), length N,
// constructed half-and-mirror so w(n) == w(N-1-n) holds bitwise.
Eigen::ArrayXd blackman_harris(Eigen::Index N);

// Exact integer view of an integer-valued sample sequence.
Eigen::Matrix<Int128, Eigen::Dynamic, 1> to_exact(const Eigen::ArrayXd& x);

}  // namespace cifb

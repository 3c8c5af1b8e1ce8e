#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "cifb/modulator.hpp"
#include "cifb/signals.hpp"

namespace cifb {

enum class VerdictReason { bounded, bound_exceeded, saturation_run, overflow, non_finite };

const char* to_string(VerdictReason r);

// BIBO assessment of a finished run.  stable <=> reason == bounded.
struct StabilityVerdict {
  bool stable = true;
  VerdictReason reason = VerdictReason::bounded;
  double max_abs_output = 0.0;
  std::optional<long long> first_violation_index;  // 1-based sample index
};

// Default verdict constants.  K = 25 separates the bounded regime
// (max|y| stays within a few tens of the input bound for stable orders)
// from divergence with comfortable margin on both sides of the L=36/37
// boundary; K is always an explicit parameter for other choices.
inline constexpr double kDefaultK = 25.0;
inline constexpr int kDefaultRunThreshold = 32;

namespace detail {

StabilityVerdict verdict_core(RunStatus status, const Eigen::ArrayXd& y, bool has_llim,
                              double llim, bool has_ulim, double ulim, double B, double K, int R);

}  // namespace detail

// Verdict per the BIBO criterion |y| < K*B plus the saturation-run heuristic
// (>= R consecutive samples pinned at a configured limit).
template <typename Scalar>
StabilityVerdict bibo_verdict(const SimulationTrace<Scalar>& trace, double B,
                              double K = kDefaultK, int R = kDefaultRunThreshold) {
  const auto& cfg = trace.config;
  return detail::verdict_core(trace.status, as_double_array(trace.y), cfg.llim.has_value(),
                              cfg.llim ? to_double(*cfg.llim) : 0.0, cfg.ulim.has_value(),
                              cfg.ulim ? to_double(*cfg.ulim) : 0.0, B, K, R);
}

// One-sided windowed power spectrum: bin k at frequency k/N carries
// 10 log10 |X_k|^2; exact-zero bins are -infinity.
struct Spectrum {
  Eigen::ArrayXd frequency;  // k/N for k = 0..N/2, cycles per sample
  Eigen::ArrayXd power_db;
  std::string window_name;
  Eigen::Index length = 0;  // N
};

Spectrum power_spectrum(const Eigen::ArrayXd& samples, const Eigen::ArrayXd& window,
                        std::string window_name = "custom");

// Least-squares line of power_db versus log10(frequency).  The line is
// level_mean_db + slope * (log10(f) - log10_f_mean), anchored at the mean of
// the included bins, so reference overlays can be drawn from the fit alone.
struct SlopeFit {
  double slope_db_per_decade = 0.0;
  double f_lo = 0.0, f_hi = 0.0;
  double residual_rms_db = 0.0;
  Eigen::Index bins_used = 0;
  double log10_f_mean = 0.0;
  double level_mean_db = 0.0;
};

// Fits over bins inside [f_lo, f_hi], skipping +-pm_bins bins around each
// excluded tone frequency and any -infinity bins.  Needs >= 10 usable bins.
SlopeFit fit_noise_slope(const Spectrum& spectrum, double f_lo, double f_hi,
                         const std::vector<double>& tone_exclusion, int pm_bins = 3);

// Folded harmonic images k*F of a tone, deduplicated, inside [0, 0.5]
// (k = 1..64) — the exclusion list for slope fits of tonal runs.
std::vector<double> tone_images(double F);

enum class NumericMode { float64, exact_int };

struct SweepRow {
  int order = 0;
  StabilityVerdict verdict;
};

struct SweepResult {
  std::vector<SweepRow> rows;            // ordered by ascending order
  std::optional<int> largest_stable;
};

// Runs the unquantized loop (dq = 0, no limits) for each order in
// [L_min, L_max] with the given stimulus and verdict parameters; exact-int
// mode requires an integer-rounded stimulus.
SweepResult find_stability_boundary(int L_min, int L_max, const SignalSpec& stimulus, double B,
                                    double K = kDefaultK, int R = kDefaultRunThreshold,
                                    NumericMode mode = NumericMode::float64);

}  // namespace cifb

#include "cifb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cifb/coefficients.hpp"
#include "cifb/dft.hpp"
#include "cifb/errors.hpp"

namespace cifb {

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::bounded: return "bounded";
    case VerdictReason::bound_exceeded: return "bound-exceeded";
    case VerdictReason::saturation_run: return "saturation-run";
    case VerdictReason::overflow: return "overflow";
    case VerdictReason::non_finite: return "non-finite";
  }
  return "?";
}

namespace detail {

StabilityVerdict verdict_core(RunStatus status, const Eigen::ArrayXd& y, bool has_llim,
                              double llim, bool has_ulim, double ulim, double B, double K,
                              int R) {
  if (!(B > 0.0)) throw InvalidSpec("input bound B must be positive");
  if (!(K > 1.0)) throw InvalidSpec("BIBO constant K must exceed 1");
  if (R < 2) throw InvalidSpec("saturation run threshold must be at least 2");

  StabilityVerdict v;
  v.max_abs_output = y.size() ? y.abs().maxCoeff() : 0.0;

  if (status != RunStatus::completed) {
    v.stable = false;
    v.reason = status == RunStatus::overflow ? VerdictReason::overflow : VerdictReason::non_finite;
    v.first_violation_index = y.size() + 1;  // the sample that failed to complete
    return v;
  }

  const double bound = K * B;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (std::abs(y(i)) >= bound) {
      v.stable = false;
      v.reason = VerdictReason::bound_exceeded;
      v.first_violation_index = i + 1;
      return v;
    }
  }

  if (has_llim || has_ulim) {
    Eigen::Index run = 0, run_start = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const bool pinned = (has_llim && y(i) == llim) || (has_ulim && y(i) == ulim);
      if (pinned) {
        if (run == 0) run_start = i;
        if (++run >= R) {
          v.stable = false;
          v.reason = VerdictReason::saturation_run;
          v.first_violation_index = run_start + 1;
          return v;
        }
      } else {
        run = 0;
      }
    }
  }
  return v;
}

}  // namespace detail

Spectrum power_spectrum(const Eigen::ArrayXd& samples, const Eigen::ArrayXd& window,
                        std::string window_name) {
  const Eigen::Index N = samples.size();
  if (window.size() != N)
    throw LengthMismatch("window length does not match sample count");
  if (!is_power_of_two(N) || N < 8)
    throw NotPowerOfTwo("spectrum length must be a power of two, at least 8");

  ComplexVec buf(N);
  for (Eigen::Index i = 0; i < N; ++i) buf(i) = std::complex<double>(samples(i) * window(i), 0.0);
  const ComplexVec X = dft_forward(buf);

  Spectrum s;
  s.length = N;
  s.window_name = std::move(window_name);
  s.frequency.resize(N / 2 + 1);
  s.power_db.resize(N / 2 + 1);
  for (Eigen::Index k = 0; k <= N / 2; ++k) {
    s.frequency(k) = static_cast<double>(k) / static_cast<double>(N);
    const double p = std::norm(X(k));
    s.power_db(k) =
        p > 0.0 ? 10.0 * std::log10(p) : -std::numeric_limits<double>::infinity();
  }
  return s;
}

SlopeFit fit_noise_slope(const Spectrum& spectrum, double f_lo, double f_hi,
                         const std::vector<double>& tone_exclusion, int pm_bins) {
  if (!(f_lo > 0.0 && f_lo < f_hi && f_hi < 0.5))
    throw InvalidSpec("fit band must satisfy 0 < f_lo < f_hi < 0.5");
  const double N = static_cast<double>(spectrum.length);

  std::vector<double> lf, pdb;
  for (Eigen::Index k = 0; k < spectrum.frequency.size(); ++k) {
    const double f = spectrum.frequency(k);
    if (f < f_lo || f > f_hi || f <= 0.0) continue;
    if (!std::isfinite(spectrum.power_db(k))) continue;  // true-zero bins carry no level
    bool excluded = false;
    for (double t : tone_exclusion) {
      if (std::abs(static_cast<double>(k) - t * N) <= pm_bins) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    lf.push_back(std::log10(f));
    pdb.push_back(spectrum.power_db(k));
  }
  if (lf.size() < 10)
    throw InsufficientBins("slope fit needs at least 10 bins, got " + std::to_string(lf.size()));

  const double n = static_cast<double>(lf.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    sx += lf[i];
    sy += pdb[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    sxx += (lf[i] - mx) * (lf[i] - mx);
    sxy += (lf[i] - mx) * (pdb[i] - my);
  }
  SlopeFit fit;
  fit.slope_db_per_decade = sxy / sxx;
  fit.f_lo = f_lo;
  fit.f_hi = f_hi;
  fit.bins_used = static_cast<Eigen::Index>(lf.size());
  fit.log10_f_mean = mx;
  fit.level_mean_db = my;
  double ss = 0;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    const double r = pdb[i] - (my + fit.slope_db_per_decade * (lf[i] - mx));
    ss += r * r;
  }
  fit.residual_rms_db = std::sqrt(ss / n);
  return fit;
}

std::vector<double> tone_images(double F) {
  std::vector<double> images;
  for (int k = 1; k <= 64; ++k) {
    double g = std::fmod(k * F, 1.0);
    if (g < 0) g += 1.0;
    const double f = g <= 0.5 ? g : 1.0 - g;
    bool dup = false;
    for (double existing : images)
      if (std::abs(existing - f) < 1e-12) {
        dup = true;
        break;
      }
    if (!dup) images.push_back(f);
  }
  std::sort(images.begin(), images.end());
  return images;
}

SweepResult find_stability_boundary(int L_min, int L_max, const SignalSpec& stimulus, double B,
                                    double K, int R, NumericMode mode) {
  check_order(L_min);
  check_order(L_max);
  if (L_min > L_max) throw InvalidSpec("sweep range is empty");
  if (mode == NumericMode::exact_int && !stimulus.integer_rounded)
    throw InvalidSpec("exact-int sweep requires an integer-rounded stimulus");

  const Eigen::ArrayXd x = sine(stimulus);
  SweepResult result;
  for (int L = L_min; L <= L_max; ++L) {
    const CoefficientSet set = cifb_coefficients(L);
    StabilityVerdict verdict;
    if (mode == NumericMode::float64) {
      auto cfg = ModulatorConfig<double>::from_set(set);
      Eigen::VectorXd xv = x.matrix();
      verdict = bibo_verdict(run(cfg, xv), B, K, R);
    } else {
      auto cfg = ModulatorConfig<Int128>::from_set(set);
      verdict = bibo_verdict(run(cfg, ScalarVec<Int128>(to_exact(x))), B, K, R);
    }
    result.rows.push_back({L, verdict});
    if (verdict.stable) result.largest_stable = L;
  }
  return result;
}

}  // namespace cifb

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <string>
#include <type_traits>

#include "cifb/coefficients.hpp"
#include "cifb/errors.hpp"
#include "cifb/int128.hpp"
#include "cifb/signals.hpp"

namespace cifb {

template <typename Scalar>
using ScalarVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Loop parameters.  The scalar selects the numeric mode: double is IEEE
// float64, Int128 is the checked exact-integer mode (which by construction
// admits only integer coefficients, step and limits).
template <typename Scalar>
struct ModulatorConfig {
  int order = 0;
  ScalarVec<Scalar> c;  // feedback, length L
  ScalarVec<Scalar> d;  // feedforward, length L+1
  Scalar dq{};          // quantization step, 0 disables quantization
  std::optional<Scalar> llim;  // lower output limit (absent = unbounded)
  std::optional<Scalar> ulim;  // upper output limit

  void validate() const {
    check_order(order);
    if (c.size() != order || d.size() != order + 1)
      throw LengthMismatch("coefficient lengths do not match order " + std::to_string(order));
    if (dq < Scalar(0)) throw InvalidSpec("quantization step must be nonnegative");
    if (llim && ulim && *ulim < *llim) throw InvalidSpec("limits must satisfy llim <= ulim");
  }

  static ModulatorConfig from_set(const CoefficientSet& set) {
    ModulatorConfig cfg;
    cfg.order = set.order;
    cfg.c.resize(set.c.size());
    cfg.d.resize(set.d.size());
    for (Eigen::Index i = 0; i < set.c.size(); ++i) cfg.c(i) = Scalar(set.c(i));
    for (Eigen::Index i = 0; i < set.d.size(); ++i) cfg.d(i) = Scalar(set.d(i));
    return cfg;
  }
};

// Live loop state: integrator outputs s_1..s_L, previous output, 1-based
// sample counter, plus a ring of the last L inputs for the delayed error
// reference (slot (m-1) % L holds x(m)).
template <typename Scalar>
struct ModulatorState {
  ScalarVec<Scalar> s;
  Scalar y_prev{};
  long long n = 1;
  ScalarVec<Scalar> xhist;
  ScalarVec<Scalar> ns;  // scratch next-state vector

  explicit ModulatorState(const ModulatorConfig<Scalar>& cfg)
      : s(ScalarVec<Scalar>::Zero(cfg.order)),
        xhist(ScalarVec<Scalar>::Zero(cfg.order)),
        ns(cfg.order) {}
};

template <typename Scalar>
struct StepRecord {
  long long n;
  Scalar x, w, y, e;  // y is post-quantize post-limit; e uses the pre-limit y
};

enum class RunStatus { completed, overflow, non_finite };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::overflow: return "overflow";
    case RunStatus::non_finite: return "non-finite";
  }
  return "?";
}

// Columnar per-sample records: row i holds sample i+1.  On early termination
// the columns are truncated to the completed samples.
template <typename Scalar>
struct SimulationTrace {
  ScalarVec<Scalar> x, w, y, e;
  RunStatus status = RunStatus::completed;
  ModulatorConfig<Scalar> config;

  Eigen::Index size() const { return x.size(); }
};

// Mid-tread quantizer, ties away from zero: dq * round(w / dq); dq = 0
// passes w through.
inline double quantize(double w, double dq) {
  if (dq == 0.0) return w;
  if (dq < 0.0) throw InvalidSpec("quantization step must be nonnegative");
  return dq * round_half_away(w / dq);
}

inline Int128 quantize(Int128 w, Int128 dq) {
  if (dq == Int128(0)) return w;
  if (dq < Int128(0)) throw InvalidSpec("quantization step must be nonnegative");
  // round-half-away on integers: (2|w| + dq) div (2 dq), sign restored.
  // Exact for even and odd steps (odd-step ties cannot occur).
  const Int128 mag = (w.abs() * Int128(2) + dq) / (dq * Int128(2));
  const Int128 out = mag * dq;
  return w < Int128(0) ? -out : out;
}

namespace detail {

inline void check_finite(double v) {
  if (!std::isfinite(v)) throw NonFiniteValue("simulation value is not finite");
}
inline void check_finite(const Int128&) {}

}  // namespace detail

// One sample of the reference state machine, in its exact statement order:
// next-state update, state latch, feedforward sum, quantize, error against
// the L-1 delayed input (before limiting), then limit.
template <typename Scalar>
StepRecord<Scalar> step(ModulatorState<Scalar>& state, Scalar x_n,
                        const ModulatorConfig<Scalar>& cfg) {
  const int L = cfg.order;
  const long long n = state.n;
  state.xhist((n - 1) % L) = x_n;

  state.ns(0) = state.s(0) + cfg.d(0) * x_n - cfg.c(0) * state.y_prev;
  for (int k = 2; k <= L; ++k)
    state.ns(k - 1) = state.s(k - 2) + state.s(k - 1) + cfg.d(k - 1) * x_n
                      - cfg.c(k - 1) * state.y_prev;
  state.s.swap(state.ns);

  const Scalar w = state.s(L - 1) + cfg.d(L) * x_n;
  detail::check_finite(w);
  Scalar y = quantize(w, cfg.dq);
  detail::check_finite(y);
  const Scalar e = (n < L) ? Scalar(0) : y - state.xhist((n - L) % L);

  if (cfg.llim && y < *cfg.llim) y = *cfg.llim;
  if (cfg.ulim && y > *cfg.ulim) y = *cfg.ulim;

  state.y_prev = y;
  state.n = n + 1;
  return {n, x_n, w, y, e};
}

// Full run from a zero-initialized state.  Overflow (exact mode) and
// non-finite values (float mode) terminate early; the trace keeps the
// completed samples and records the cause.
template <typename Scalar>
SimulationTrace<Scalar> run(const ModulatorConfig<Scalar>& cfg, const ScalarVec<Scalar>& x) {
  cfg.validate();
  if (x.size() == 0) throw InvalidSpec("stimulus must be nonempty");
  SimulationTrace<Scalar> trace;
  trace.config = cfg;
  const Eigen::Index N = x.size();
  trace.x.resize(N);
  trace.w.resize(N);
  trace.y.resize(N);
  trace.e.resize(N);
  ModulatorState<Scalar> state(cfg);
  Eigen::Index done = 0;
  try {
    for (; done < N; ++done) {
      const StepRecord<Scalar> rec = step(state, x(done), cfg);
      trace.x(done) = rec.x;
      trace.w(done) = rec.w;
      trace.y(done) = rec.y;
      trace.e(done) = rec.e;
    }
  } catch (const IntegerOverflow&) {
    trace.status = RunStatus::overflow;
  } catch (const NonFiniteValue&) {
    trace.status = RunStatus::non_finite;
  }
  if (done < N) {
    trace.x.conservativeResize(done);
    trace.w.conservativeResize(done);
    trace.y.conservativeResize(done);
    trace.e.conservativeResize(done);
  }
  return trace;
}

inline double to_double(double v) { return v; }
inline double to_double(const Int128& v) { return v.to_double(); }

template <typename Scalar>
Eigen::ArrayXd as_double_array(const ScalarVec<Scalar>& v) {
  Eigen::ArrayXd r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = to_double(v(i));
  return r;
}

}  // namespace cifb

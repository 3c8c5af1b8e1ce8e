#include "cifb/transfer.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "cifb/errors.hpp"

namespace cifb {

Polynomial expand_shifted_power(int k) {
  if (k < 0 || k > kMaxOrder)
    throw DegreeOutOfRange("exponent " + std::to_string(k) + " outside 0..64");
  // Repeated multiplication by (z - 1); coefficients are signed binomials.
  ExactVec zm1c(2);
  zm1c(0) = Int128(-1);
  zm1c(1) = Int128(1);
  const Polynomial zm1(zm1c);
  Polynomial p(ExactVec::Constant(1, Int128(1)));
  for (int i = 0; i < k; ++i) p = mul(p, zm1);
  return p;
}

Polynomial expand_denominator(const IntVec& c, int L) {
  check_order(L);
  if (c.size() != L)
    throw LengthMismatch("feedback vector length " + std::to_string(c.size()) +
                         " does not match order " + std::to_string(L));
  Polynomial d = expand_shifted_power(L);
  for (int k = 1; k <= L; ++k)
    d = add(d, scale(expand_shifted_power(k - 1), Int128(c(k - 1))));
  return d;
}

RationalTransfer ntf(const IntVec& c, int L) {
  return {expand_shifted_power(L), expand_denominator(c, L)};
}

RationalTransfer stf(const IntVec& c, const IntVec& d, int L) {
  check_order(L);
  if (c.size() != L || d.size() != L + 1)
    throw LengthMismatch("coefficient vector lengths do not match order " + std::to_string(L));
  Polynomial num;
  for (int k = 1; k <= L + 1; ++k)
    num = add(num, scale(expand_shifted_power(k - 1), Int128(d(k - 1))));
  return {num, expand_denominator(c, L)};
}

namespace {

struct Eval {
  double magnitude;
  double bound;  // absolute error bound on |value|
};

// Horner evaluation at complex point b with a running first-order error
// bound: |error| <= (2n + 2) * eps * sum |a_k| |b|^k (covers both rounding
// and the double conversion of the exact coefficients).
Eval horner(const ExactVec& a, std::complex<double> b, double abs_b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const Eigen::Index n = a.size();
  // Monomial shortcut: a single nonzero coefficient has exact magnitude
  // |a_k| * |b|^k, with no cancellation to bound.
  Eigen::Index nonzero = -1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) == Int128(0)) continue;
    if (nonzero >= 0) {
      nonzero = -2;
      break;
    }
    nonzero = i;
  }
  if (nonzero == -1) return {0.0, 0.0};
  if (nonzero >= 0) {
    const double mag =
        std::abs(a(nonzero).to_double()) * std::pow(abs_b, static_cast<double>(nonzero));
    return {mag, (static_cast<double>(nonzero) + 2.0) * eps * mag};
  }
  std::complex<double> r(0.0, 0.0);
  double s = 0.0;  // sum |a_k| |b|^k accumulated alongside
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    const double ai = a(i).to_double();
    r = r * b + ai;
    s = s * abs_b + std::abs(ai);
  }
  return {std::abs(r), (2.0 * static_cast<double>(n) + 2.0) * eps * s};
}

// Magnitude of p at e^{jw}, evaluated in the z basis and (when the exact
// shift fits 128 bits) the u = z - 1 basis, keeping the better-conditioned
// result.
double magnitude_at(const Polynomial& p, double omega) {
  const std::complex<double> z(std::cos(omega), std::sin(omega));
  Eval best = horner(p.coeffs, z, 1.0);
  if (auto shifted = taylor_shift(p)) {
    const double abs_u = 2.0 * std::sin(omega / 2.0);  // |e^{jw} - 1|, exact form
    const std::complex<double> u = z - 1.0;
    const Eval alt = horner(shifted->coeffs, u, abs_u);
    const auto rel = [](const Eval& e) {
      return e.magnitude > 0.0 ? e.bound / e.magnitude
                               : std::numeric_limits<double>::infinity();
    };
    if ((alt.magnitude == 0.0 && alt.bound == 0.0) || rel(alt) < rel(best)) best = alt;
  }
  return best.magnitude;
}

}  // namespace

double eval_magnitude(const RationalTransfer& tf, double omega) {
  if (!(omega >= 0.0 && omega <= std::acos(-1.0)))
    throw InvalidSpec("omega must lie in [0, pi]");
  if (tf.denominator.is_zero()) throw InvalidSpec("denominator is identically zero");
  const double den_mag = magnitude_at(tf.denominator, omega);
  if (den_mag < 1e-15 * coeff_norm(tf.denominator))
    throw PoleOnUnitCircle("denominator vanishes at omega = " + std::to_string(omega));
  return magnitude_at(tf.numerator, omega) / den_mag;
}

}  // namespace cifb

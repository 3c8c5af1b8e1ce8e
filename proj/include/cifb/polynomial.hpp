#pragma once

#include <Eigen/Core>
#include <optional>

#include "cifb/coefficients.hpp"
#include "cifb/int128.hpp"

namespace cifb {

using ExactVec = Eigen::Matrix<Int128, Eigen::Dynamic, 1>;

// Dense polynomial in z with exact 128-bit integer coefficients, stored in
// ascending powers: coeffs(k) multiplies z^k.  The zero polynomial is the
// single coefficient [0]; otherwise the leading coefficient is nonzero.
struct Polynomial {
  ExactVec coeffs;

  Polynomial() : coeffs(ExactVec::Constant(1, Int128(0))) {}
  explicit Polynomial(ExactVec c);
  static Polynomial from_int64(const IntVec& c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;
  bool operator==(const Polynomial& o) const;
};

// Exact arithmetic; all throw IntegerOverflow if 128 bits are exceeded.
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, Int128 k);

// p(u + 1) expanded in powers of u: the exact basis change from z to
// u = z - 1.  Returns nullopt if the shifted coefficients overflow 128 bits
// (callers then stay in the z basis).
std::optional<Polynomial> taylor_shift(const Polynomial& p);

// Sum of |coeffs| converted to double (scale reference for pole detection).
double coeff_norm(const Polynomial& p);

}  // namespace cifb

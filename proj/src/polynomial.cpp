#include "cifb/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "cifb/errors.hpp"

namespace cifb {

namespace {

ExactVec trimmed(const ExactVec& c) {
  Eigen::Index n = c.size();
  while (n > 1 && c(n - 1) == Int128(0)) --n;
  if (n == c.size()) return c;
  return c.head(n);
}

}  // namespace

Polynomial::Polynomial(ExactVec c) : coeffs(trimmed(c)) {
  if (coeffs.size() == 0) coeffs = ExactVec::Constant(1, Int128(0));
}

Polynomial Polynomial::from_int64(const IntVec& c) {
  ExactVec e(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) e(i) = Int128(c(i));
  return Polynomial(std::move(e));
}

bool Polynomial::is_zero() const { return coeffs.size() == 1 && coeffs(0) == Int128(0); }

bool Polynomial::operator==(const Polynomial& o) const {
  if (coeffs.size() != o.coeffs.size()) return false;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    if (!(coeffs(i) == o.coeffs(i))) return false;
  return true;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  const Eigen::Index n = std::max(a.coeffs.size(), b.coeffs.size());
  ExactVec r = ExactVec::Constant(n, Int128(0));
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) r(i) += a.coeffs(i);
  for (Eigen::Index i = 0; i < b.coeffs.size(); ++i) r(i) += b.coeffs(i);
  return Polynomial(std::move(r));
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  const Eigen::Index n = std::max(a.coeffs.size(), b.coeffs.size());
  ExactVec r = ExactVec::Constant(n, Int128(0));
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) r(i) += a.coeffs(i);
  for (Eigen::Index i = 0; i < b.coeffs.size(); ++i) r(i) -= b.coeffs(i);
  return Polynomial(std::move(r));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  ExactVec r = ExactVec::Constant(a.coeffs.size() + b.coeffs.size() - 1, Int128(0));
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i)
    for (Eigen::Index j = 0; j < b.coeffs.size(); ++j) r(i + j) += a.coeffs(i) * b.coeffs(j);
  return Polynomial(std::move(r));
}

Polynomial scale(const Polynomial& a, Int128 k) {
  ExactVec r = a.coeffs;
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) *= k;
  return Polynomial(std::move(r));
}

std::optional<Polynomial> taylor_shift(const Polynomial& p) {
  // b_j = sum_k a_k * C(k, j), accumulated row by row with an incrementally
  // updated binomial row; everything checked 128-bit.
  try {
    const Eigen::Index n = p.coeffs.size();
    ExactVec b = ExactVec::Constant(n, Int128(0));
    ExactVec binom = ExactVec::Constant(n, Int128(0));  // row k of Pascal while at k
    for (Eigen::Index k = 0; k < n; ++k) {
      // update binom from row k-1 to row k (in place, right to left)
      binom(k) = 1;
      for (Eigen::Index j = k - 1; j > 0; --j) binom(j) += binom(j - 1);
      const Int128 ak = p.coeffs(k);
      if (ak == Int128(0)) continue;
      for (Eigen::Index j = 0; j <= k; ++j) b(j) += ak * binom(j);
    }
    return Polynomial(std::move(b));
  } catch (const IntegerOverflow&) {
    return std::nullopt;
  }
}

double coeff_norm(const Polynomial& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.coeffs.size(); ++i) s += std::abs(p.coeffs(i).to_double());
  return s;
}

}  // namespace cifb

#include "cifb/dft.hpp"

#include <cmath>
#include <numbers>

#include "cifb/errors.hpp"

namespace cifb {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

void fft_inplace(ComplexVec& a, bool inverse) {
  const Eigen::Index n = a.size();
  if (!is_power_of_two(n)) throw NotPowerOfTwo("transform length must be a power of two");
  // bit-reversal permutation
  for (Eigen::Index i = 1, j = 0; i < n; ++i) {
    Eigen::Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a(i), a(j));
  }
  for (Eigen::Index len = 2; len <= n; len <<= 1) {
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (Eigen::Index i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (Eigen::Index k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a(i + k);
        const std::complex<double> v = a(i + k + len / 2) * w;
        a(i + k) = u + v;
        a(i + k + len / 2) = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

ComplexVec dft_forward(const ComplexVec& x) {
  ComplexVec a = x;
  fft_inplace(a, false);
  return a;
}

ComplexVec dft_inverse(const ComplexVec& X) {
  ComplexVec a = X;
  fft_inplace(a, true);
  a /= static_cast<double>(a.size());
  return a;
}

}  // namespace cifb

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cifb/dft.hpp"
#include "cifb/errors.hpp"

using namespace cifb;

namespace {

// O(N^2) direct summation, the independent reference
ComplexVec dft_direct(const ComplexVec& x) {
  const Eigen::Index N = x.size();
  ComplexVec X(N);
  for (Eigen::Index k = 0; k < N; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (Eigen::Index n = 0; n < N; ++n) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                         static_cast<double>(n) / static_cast<double>(N);
      acc += x(n) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    X(k) = acc;
  }
  return X;
}

}  // namespace

TEST_CASE("delta input has flat unit magnitude") {
  for (Eigen::Index m : {0, 1, 5}) {
    ComplexVec x = ComplexVec::Zero(64);
    x(m) = 1.0;
    const ComplexVec X = dft_forward(x);
    for (Eigen::Index k = 0; k < 64; ++k)
      CHECK(std::abs(X(k)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("radix-2 matches direct summation to 1e-9 relative, N <= 256") {
  std::mt19937_64 rng(0xC1FB0005ull);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (Eigen::Index N : {8, 16, 64, 256}) {
    ComplexVec x(N);
    for (Eigen::Index i = 0; i < N; ++i) x(i) = std::complex<double>(d(rng), d(rng));
    const ComplexVec a = dft_forward(x);
    const ComplexVec b = dft_direct(x);
    const double scale = a.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < N; ++k) CHECK(std::abs(a(k) - b(k)) <= 1e-9 * scale);
  }
}

TEST_CASE("inverse of forward is the identity to 1e-12 relative") {
  std::mt19937_64 rng(0xC1FB0006ull);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (Eigen::Index N : {8, 128, 1024}) {
    ComplexVec x(N);
    for (Eigen::Index i = 0; i < N; ++i) x(i) = std::complex<double>(d(rng), d(rng));
    const ComplexVec r = dft_inverse(dft_forward(x));
    const double scale = x.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < N; ++k) CHECK(std::abs(r(k) - x(k)) <= 1e-12 * scale);
  }
}

TEST_CASE("non-power-of-two lengths are rejected") {
  CHECK_THROWS_AS(dft_forward(ComplexVec::Zero(12)), NotPowerOfTwo);
  CHECK_THROWS_AS(dft_forward(ComplexVec::Zero(0)), NotPowerOfTwo);
  CHECK_NOTHROW(dft_forward(ComplexVec::Zero(16)));
}

TEST_CASE("power of two predicate") {
  CHECK(is_power_of_two(1));
  CHECK(is_power_of_two(2));
  CHECK(is_power_of_two(262144));
  CHECK(!is_power_of_two(0));
  CHECK(!is_power_of_two(12));
  CHECK(!is_power_of_two(-8));
}

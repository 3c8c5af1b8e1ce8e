#pragma once

#include <Eigen/Core>
#include <complex>

namespace cifb {

using ComplexVec = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1>;

// Unnormalized forward DFT, X_k = sum_n x_n e^{-j 2 pi k n / N}, via
// iterative radix-2 decimation in time.  N must be a power of two.
ComplexVec dft_forward(const ComplexVec& x);

// Inverse DFT with 1/N normalization; dft_inverse(dft_forward(x)) == x.
ComplexVec dft_inverse(const ComplexVec& X);

bool is_power_of_two(Eigen::Index n);

}  // namespace cifb

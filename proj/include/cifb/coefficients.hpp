#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace cifb {

// Loop order: number of cascaded delaying integrators.  Valid range 1..64 so
// every binomial coefficient C(L, k) stays inside a 64-bit signed integer.
inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 64;

using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Row L of Pascal's triangle: values[j] = C(L, j), j = 0..L.
using PascalRow = IntVec;

// Full CIFB coefficient set: distributed feedback c_1..c_L and input
// feedforward d_1..d_{L+1} (stored 0-based; c(k-1) holds c_k).
struct CoefficientSet {
  int order = 0;
  IntVec c;  // length L, c_k = C(L, k-1)
  IntVec d;  // length L+1, d = [1, 0, ..., 0]
};

// Throws OrderOutOfRange unless lo <= L <= kMaxOrder.
void check_order(int L, int lo = kMinOrder);

// Pascal row via the cascaded-integrator state machine: the impulse response
// of L+1 chained accumulators after L+1 steps, using the next-state
// recurrence ns(1) = s(1) + x(n); ns(k) = s(k-1) + s(k).  Exact integers.
PascalRow gen_pascal(int L);

// Independent closed-form oracle: multiplicative recurrence
// C(L, j) = C(L, j-1) * (L - j + 1) / j (division exact).  Accepts L = 0.
PascalRow binomial_oracle(int L);

// Binomial CIFB set: c_k = C(L, k-1), d = [1, 0, ..., 0].
CoefficientSet cifb_coefficients(int L);

}  // namespace cifb

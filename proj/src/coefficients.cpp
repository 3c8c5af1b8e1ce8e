#include "cifb/coefficients.hpp"

#include <string>

#include "cifb/errors.hpp"

namespace cifb {

void check_order(int L, int lo) {
  if (L < lo || L > kMaxOrder)
    throw OrderOutOfRange("order " + std::to_string(L) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(kMaxOrder));
}

PascalRow gen_pascal(int L) {
  check_order(L);
  // L+1 cascaded accumulators fed with a unit impulse; after L+1 steps the
  // state vector reads row L of Pascal's triangle.  Row values are bounded by
  // C(64, 32) < 2^63, so plain 64-bit arithmetic is exact.
  PascalRow s = PascalRow::Zero(L + 1);
  PascalRow ns(L + 1);
  for (int n = 1; n <= L + 1; ++n) {
    const std::int64_t xn = (n == 1) ? 1 : 0;
    ns(0) = s(0) + xn;
    for (int k = 2; k <= L + 1; ++k) ns(k - 1) = s(k - 2) + s(k - 1);
    s = ns;
  }
  return s;
}

PascalRow binomial_oracle(int L) {
  check_order(L, 0);  // L = 0 is the empty product, row [1]
  PascalRow row(L + 1);
  row(0) = 1;
  for (int j = 1; j <= L; ++j) {
    // The product before division can exceed 64 bits (C(64,31)*34 ~ 6e19);
    // widen, divide exactly, and the quotient fits again.
    __int128 p = static_cast<__int128>(row(j - 1)) * (L - j + 1);
    row(j) = static_cast<std::int64_t>(p / j);
  }
  return row;
}

CoefficientSet cifb_coefficients(int L) {
  check_order(L);
  CoefficientSet set;
  set.order = L;
  const PascalRow row = binomial_oracle(L);
  set.c = row.head(L);  // c_k = C(L, k-1)
  set.d = IntVec::Zero(L + 1);
  set.d(0) = 1;
  return set;
}

}  // namespace cifb

#include <doctest.h>

#include "cifb/coefficients.hpp"
#include "cifb/errors.hpp"

using namespace cifb;

TEST_CASE("pascal row: small known rows") {
  const PascalRow r4 = gen_pascal(4);
  REQUIRE(r4.size() == 5);
  CHECK(r4(0) == 1);
  CHECK(r4(1) == 4);
  CHECK(r4(2) == 6);
  CHECK(r4(3) == 4);
  CHECK(r4(4) == 1);

  const PascalRow r1 = gen_pascal(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1(0) == 1);
  CHECK(r1(1) == 1);
}

TEST_CASE("pascal row: frozen large values") {
  CHECK(gen_pascal(30)(15) == 155117520);
  CHECK(gen_pascal(37)(18) == 17672631900LL);
  CHECK(gen_pascal(37)(19) == 17672631900LL);
  CHECK(gen_pascal(51)(25) == 247959266474052LL);
  CHECK(gen_pascal(51)(26) == 247959266474052LL);
}

TEST_CASE("oracle: closed form agrees with the state machine for all orders") {
  for (int L = 1; L <= kMaxOrder; ++L) {
    const PascalRow a = gen_pascal(L);
    const PascalRow b = binomial_oracle(L);
    REQUIRE(a.size() == b.size());
    for (Eigen::Index j = 0; j < a.size(); ++j) CHECK(a(j) == b(j));
  }
}

TEST_CASE("oracle: degenerate order zero") {
  const PascalRow r = binomial_oracle(0);
  REQUIRE(r.size() == 1);
  CHECK(r(0) == 1);
}

TEST_CASE("pascal row invariants: symmetry, sum, recurrence") {
  for (int L = 1; L <= kMaxOrder; ++L) {
    const PascalRow r = gen_pascal(L);
    // symmetry
    for (Eigen::Index j = 0; j < r.size(); ++j) CHECK(r(j) == r(L - j));
    // sum = 2^L (guard against int64 overflow of the sum itself: only L <= 62)
    if (L <= 62) {
      std::int64_t sum = 0;
      for (Eigen::Index j = 0; j < r.size(); ++j) sum += r(j);
      CHECK(sum == (std::int64_t{1} << L));
    }
    // row recurrence against the previous row
    if (L > 1) {
      const PascalRow prev = gen_pascal(L - 1);
      for (Eigen::Index j = 0; j < r.size(); ++j) {
        const std::int64_t left = (j > 0) ? prev(j - 1) : 0;
        const std::int64_t right = (j < prev.size()) ? prev(j) : 0;
        CHECK(r(j) == left + right);
      }
    }
  }
}

TEST_CASE("pascal row sum for the top orders via 128-bit accumulation") {
  for (int L = 63; L <= 64; ++L) {
    const PascalRow r = gen_pascal(L);
    __int128 sum = 0;
    for (Eigen::Index j = 0; j < r.size(); ++j) sum += r(j);
    __int128 expect = static_cast<__int128>(1) << L;
    CHECK(sum == expect);
  }
}

TEST_CASE("order bounds are enforced") {
  CHECK_THROWS_AS(gen_pascal(0), OrderOutOfRange);
  CHECK_THROWS_AS(gen_pascal(65), OrderOutOfRange);
  CHECK_THROWS_AS(gen_pascal(-3), OrderOutOfRange);
  CHECK_THROWS_AS(binomial_oracle(-1), OrderOutOfRange);
  CHECK_THROWS_AS(binomial_oracle(65), OrderOutOfRange);
  CHECK_THROWS_AS(cifb_coefficients(0), OrderOutOfRange);
  CHECK_NOTHROW(gen_pascal(64));
}

TEST_CASE("cifb coefficient set layout") {
  const CoefficientSet s2 = cifb_coefficients(2);
  REQUIRE(s2.c.size() == 2);
  REQUIRE(s2.d.size() == 3);
  CHECK(s2.c(0) == 1);
  CHECK(s2.c(1) == 2);
  CHECK(s2.d(0) == 1);
  CHECK(s2.d(1) == 0);
  CHECK(s2.d(2) == 0);

  const CoefficientSet s1 = cifb_coefficients(1);
  CHECK(s1.c(0) == 1);
  CHECK(s1.d(0) == 1);
  CHECK(s1.d(1) == 0);

  // c_k = C(L, k-1): the L=30 maximum coefficient sits at k=16
  const CoefficientSet s30 = cifb_coefficients(30);
  CHECK(s30.c(15) == 155117520);
  CHECK(s30.c.maxCoeff() == 155117520);
}

#include <doctest.h>

#include "cifb/errors.hpp"
#include "cifb/polynomial.hpp"

using namespace cifb;

namespace {

Polynomial poly(std::initializer_list<long long> cs) {
  ExactVec v(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (long long c : cs) v(i++) = Int128(c);
  return Polynomial(v);
}

}  // namespace

TEST_CASE("polynomial trims leading zeros and keeps the zero polynomial canonical") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({0}).degree() == 0);
  CHECK(Polynomial().is_zero());
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a = poly({1, 2});      // 1 + 2z
  const Polynomial b = poly({-1, 1});     // z - 1
  CHECK(add(a, b) == poly({0, 3}));
  CHECK(sub(a, b) == poly({2, 1}));
  CHECK(mul(a, b) == poly({-1, -1, 2}));  // (1+2z)(z-1) = -1 - z + 2z^2
  CHECK(scale(a, Int128(3)) == poly({3, 6}));
  CHECK(mul(a, Polynomial()).is_zero());
  CHECK(add(a, Polynomial()) == a);
}

TEST_CASE("cancellation in subtraction trims to zero") {
  const Polynomial a = poly({5, 7, 9});
  CHECK(sub(a, a).is_zero());
}

TEST_CASE("taylor shift moves between the z and z-1 bases") {
  // p(z) = z^2 -> p(u+1) = u^2 + 2u + 1
  CHECK(*taylor_shift(poly({0, 0, 1})) == poly({1, 2, 1}));
  // p(z) = (z-1)^2 = 1 - 2z + z^2 -> p(u+1) = u^2
  CHECK(*taylor_shift(poly({1, -2, 1})) == poly({0, 0, 1}));
  // constant stays put
  CHECK(*taylor_shift(poly({42})) == poly({42}));
  // shift is evaluation-consistent: p(2) == shifted(1)
  const Polynomial p = poly({3, -1, 4, 1});
  const Polynomial q = *taylor_shift(p);
  // p(2) = 3 - 2 + 16 + 8 = 25; q(1) = sum of coefficients
  Int128 sum(0);
  for (Eigen::Index i = 0; i < q.coeffs.size(); ++i) sum += q.coeffs(i);
  CHECK(sum == Int128(25));
}

TEST_CASE("coefficient norm") {
  CHECK(coeff_norm(poly({3, -4})) == doctest::Approx(7.0));
  CHECK(coeff_norm(Polynomial()) == 0.0);
}

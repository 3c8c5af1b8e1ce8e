#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "cifb/errors.hpp"

namespace cifb {

// Signed 128-bit integer with overflow-checked arithmetic.  Every operation
// that could leave the representable range throws IntegerOverflow instead of
// wrapping; this is what lets the exact-integer simulation mode distinguish
// genuine divergence from arithmetic wraparound.
class Int128 {
 public:
  constexpr Int128() : v_(0) {}
  constexpr Int128(long long v) : v_(v) {}          // NOLINT(google-explicit-constructor)
  constexpr Int128(long v) : v_(v) {}               // NOLINT(google-explicit-constructor)
  constexpr Int128(int v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  constexpr explicit Int128(__int128 v) : v_(v) {}

  // Exact conversion of an integral double (|d| must be below 2^127).
  static Int128 from_double(double d) {
    if (!std::isfinite(d)) throw NonFiniteValue("cannot convert non-finite value to integer");
    if (d != std::floor(d)) throw InvalidSpec("value is not an integer");
    if (std::abs(d) >= 0x1p127) throw IntegerOverflow("double exceeds 128-bit range");
    return Int128(static_cast<__int128>(d));
  }

  double to_double() const { return static_cast<double>(v_); }
  __int128 raw() const { return v_; }

  Int128 operator+(Int128 o) const {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw IntegerOverflow("128-bit add overflow");
    return Int128(r);
  }
  Int128 operator-(Int128 o) const {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw IntegerOverflow("128-bit subtract overflow");
    return Int128(r);
  }
  Int128 operator*(Int128 o) const {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw IntegerOverflow("128-bit multiply overflow");
    return Int128(r);
  }
  Int128 operator-() const {
    __int128 r;
    if (__builtin_sub_overflow(static_cast<__int128>(0), v_, &r))
      throw IntegerOverflow("128-bit negate overflow");
    return Int128(r);
  }
  // Truncating division; exact only when the caller guarantees divisibility.
  Int128 operator/(Int128 o) const {
    if (o.v_ == 0) throw InvalidSpec("division by zero");
    return Int128(static_cast<__int128>(v_ / o.v_));
  }

  Int128& operator+=(Int128 o) { return *this = *this + o; }
  Int128& operator-=(Int128 o) { return *this = *this - o; }
  Int128& operator*=(Int128 o) { return *this = *this * o; }

  bool operator==(const Int128&) const = default;
  auto operator<=>(const Int128&) const = default;

  Int128 abs() const { return v_ < 0 ? -*this : *this; }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 u =
        v_ < 0 ? static_cast<unsigned __int128>(-(v_ + 1)) + 1 : static_cast<unsigned __int128>(v_);
    std::string s;
    while (u) {
      s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    }
    if (v_ < 0) s.push_back('-');
    return {s.rbegin(), s.rend()};
  }

 private:
  __int128 v_;
};

inline std::string to_string(Int128 v) { return v.str(); }

}  // namespace cifb

namespace Eigen {

// Minimal scalar traits so Int128 vectors/matrices can be stored and moved
// through Eigen dense types.  Only exact integer arithmetic is supported.
template <>
struct NumTraits<cifb::Int128> {
  using Real = cifb::Int128;
  using NonInteger = double;
  using Nested = cifb::Int128;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return cifb::Int128(0); }
  static inline Real dummy_precision() { return cifb::Int128(0); }
  static inline Real highest() {
    return cifb::Int128(static_cast<__int128>((static_cast<unsigned __int128>(1) << 127) - 1));
  }
  static inline Real lowest() {
    return cifb::Int128(static_cast<__int128>(-static_cast<__int128>(
        (static_cast<unsigned __int128>(1) << 127) - 1)) - 1);
  }
  static inline int digits10() { return 38; }
};

}  // namespace Eigen

#pragma once

#include <stdexcept>
#include <string>

namespace cifb {

// Base for every domain error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderOutOfRange : Error {
  using Error::Error;
};
struct DegreeOutOfRange : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct PoleOnUnitCircle : Error {
  using Error::Error;
};
struct IntegerOverflow : Error {
  using Error::Error;
};
struct NonFiniteValue : Error {
  using Error::Error;
};
struct InvalidSpec : Error {
  using Error::Error;
};
struct WindowTooShort : Error {
  using Error::Error;
};
struct NotPowerOfTwo : Error {
  using Error::Error;
};
struct InsufficientBins : Error {
  using Error::Error;
};

}  // namespace cifb

#pragma once

#include <stdexcept>
#include <string>

namespace padicert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PADICERT_ERROR(Name)           \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

PADICERT_ERROR(InvalidArgument);
PADICERT_ERROR(PrecisionExhausted);
PADICERT_ERROR(DivisionByZero);
PADICERT_ERROR(NotSquarefree);
PADICERT_ERROR(MaxPrecisionExceeded);
PADICERT_ERROR(NonIntegralDensity);
PADICERT_ERROR(DepthZero);
PADICERT_ERROR(NonUnitJacobian);

#undef PADICERT_ERROR

// Parse failures carry the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace padicert

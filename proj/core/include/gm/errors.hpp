#pragma once

#include <stdexcept>
#include <string>

namespace gm {

// Base of every error raised by the library. Subclasses name the failure
// kind so callers (and the CLI) can map them to exit codes and messages.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GM_DECLARE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

GM_DECLARE_ERROR(NotPrimePower);
GM_DECLARE_ERROR(DivisionByZero);
GM_DECLARE_ERROR(NotSimple);
GM_DECLARE_ERROR(BadVertex);
GM_DECLARE_ERROR(TooLarge);
GM_DECLARE_ERROR(LengthMismatch);
GM_DECLARE_ERROR(BudgetExceeded);
GM_DECLARE_ERROR(BadArgs);
GM_DECLARE_ERROR(BadParams);
GM_DECLARE_ERROR(NotAForest);
GM_DECLARE_ERROR(InsufficientPoints);
GM_DECLARE_ERROR(ParseError);
GM_DECLARE_ERROR(InternalError);

#undef GM_DECLARE_ERROR

}  // namespace gm

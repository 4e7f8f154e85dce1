#pragma once

#include <stdexcept>
#include <string>

namespace entinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ENTINV_DEFINE_ERROR(Name)      \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

// Linear algebra.
ENTINV_DEFINE_ERROR(ColumnMismatch);
ENTINV_DEFINE_ERROR(EmptyFamily);
ENTINV_DEFINE_ERROR(DivisionByZero);

// States and their text form.
ENTINV_DEFINE_ERROR(SyntaxError);
ENTINV_DEFINE_ERROR(IndexOutOfRange);
ENTINV_DEFINE_ERROR(ArityMismatch);
ENTINV_DEFINE_ERROR(BadSubset);
ENTINV_DEFINE_ERROR(ShapeMismatch);
ENTINV_DEFINE_ERROR(ShapeNotPermutable);
ENTINV_DEFINE_ERROR(ZeroState);
ENTINV_DEFINE_ERROR(InvalidShape);

// Invariants and search.
ENTINV_DEFINE_ERROR(DivisibilityViolation);
ENTINV_DEFINE_ERROR(UnsupportedArity);
ENTINV_DEFINE_ERROR(SearchSpaceTooLarge);
ENTINV_DEFINE_ERROR(Unsupported);
ENTINV_DEFINE_ERROR(NonQubitShape);
ENTINV_DEFINE_ERROR(InvalidArgument);

#undef ENTINV_DEFINE_ERROR

}  // namespace entinv

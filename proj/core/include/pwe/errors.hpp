#pragma once

#include <stdexcept>
#include <string>

namespace pwe {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PWE_DECLARE_ERROR(Name)             \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

PWE_DECLARE_ERROR(DuplicateIndex);
PWE_DECLARE_ERROR(InvalidDurfee);
PWE_DECLARE_ERROR(NotPositive);
PWE_DECLARE_ERROR(ShapeError);
PWE_DECLARE_ERROR(ZeroPolynomial);
PWE_DECLARE_ERROR(InvalidDegree);
PWE_DECLARE_ERROR(DegenerateChain);
PWE_DECLARE_ERROR(NotDivisible);
PWE_DECLARE_ERROR(OracleMismatch);
PWE_DECLARE_ERROR(PotentialMismatch);
PWE_DECLARE_ERROR(NotProportional);
PWE_DECLARE_ERROR(ParseError);

#undef PWE_DECLARE_ERROR

}  // namespace pwe

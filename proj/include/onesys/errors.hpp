#pragma once

#include <stdexcept>
#include <string>

namespace onesys {

// Thrown by interval predicates when the current working precision cannot
// decide a sign.  Caught by the retry driver in numeric.hpp, never by users.
struct NeedMorePrecision {
    const char* where = "";
};

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ONESYS_ERROR_TYPE(Name)                                               \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}    \
    }

ONESYS_ERROR_TYPE(PrecisionExhausted);
ONESYS_ERROR_TYPE(NotHyperbolic);
ONESYS_ERROR_TYPE(DegenerateConfiguration);
ONESYS_ERROR_TYPE(MalformedPairing);
ONESYS_ERROR_TYPE(TrivialWord);
ONESYS_ERROR_TYPE(NotPrimitive);
ONESYS_ERROR_TYPE(MultipleCrossings);
ONESYS_ERROR_TYPE(NoCrossing);
ONESYS_ERROR_TYPE(IdenticalTrajectories);
ONESYS_ERROR_TYPE(TypeOutOfRange);
ONESYS_ERROR_TYPE(PointOutsideInnerFlower);
ONESYS_ERROR_TYPE(DifferentBasepoints);
ONESYS_ERROR_TYPE(UncertifiedCount);
ONESYS_ERROR_TYPE(ExtensionNotFound);
ONESYS_ERROR_TYPE(ConstructionFailed);
ONESYS_ERROR_TYPE(IoFailure);

#undef ONESYS_ERROR_TYPE

} // namespace onesys

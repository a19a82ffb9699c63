#ifndef FRACDIFF_ERRORS_HPP
#define FRACDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracdiff {

// Base for runtime numerical failures (CLI exit code 3). Invalid model or
// policy parameters throw std::invalid_argument instead (CLI exit code 2).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : Error { using Error::Error; };
struct AsymptoticUnreliable : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NumericalBreakdown : Error { using Error::Error; };
struct TailEstimateFailed : Error { using Error::Error; };
struct PoleCollision : Error { using Error::Error; };
struct StripViolation : Error { using Error::Error; };
struct MomentDoesNotExist : Error { using Error::Error; };
struct RequiresAlpha2 : Error { using Error::Error; };
struct SingularEndpoint : Error { using Error::Error; };
struct AsymmetricUnsupported : Error { using Error::Error; };

} // namespace fracdiff

#endif

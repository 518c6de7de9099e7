#pragma once

#include <stdexcept>

namespace svet {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resource-guard violations (state dimension, search-space size). The CLI
/// maps these to a dedicated exit code.
class GuardError : public Error {
public:
    using Error::Error;
};

struct WrongArity : Error { using Error::Error; };
struct IllegalZeroPhase : Error { using Error::Error; };
struct ZeroPhaseForbidden : Error { using Error::Error; };
struct NonZeroSpinRequired : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ImaginaryResidue : Error { using Error::Error; };
struct NotHalfInteger : Error { using Error::Error; };
struct NotInteger : Error { using Error::Error; };
struct NonRationalPhase : Error { using Error::Error; };
struct MissingSearchValue : Error { using Error::Error; };
struct ScenarioParseError : Error { using Error::Error; };

struct DimensionGuardExceeded : GuardError { using GuardError::GuardError; };
struct SearchGuardExceeded : GuardError { using GuardError::GuardError; };

} // namespace svet

#pragma once

#include <stdexcept>
#include <string>

namespace pointscat {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Validation errors (CLI exit code 2).
class ValidationError : public Error {
  public:
    using Error::Error;
};

// Numerical failures (CLI exit code 3).
class NumericalError : public Error {
  public:
    using Error::Error;
};

struct ConstraintViolation : ValidationError { using ValidationError::ValidationError; };
struct NonPositiveScale   : ValidationError { using ValidationError::ValidationError; };
struct NotParityEven      : ValidationError { using ValidationError::ValidationError; };
struct NotMaximalTV       : ValidationError { using ValidationError::ValidationError; };
struct NoBoundState       : ValidationError { using ValidationError::ValidationError; };
struct UnsupportedMoment  : ValidationError { using ValidationError::ValidationError; };
struct InvalidScale       : ValidationError { using ValidationError::ValidationError; };
struct NonPerturbative    : ValidationError { using ValidationError::ValidationError; };
struct ZeroScatteringLength : ValidationError { using ValidationError::ValidationError; };
struct PoleArgument       : ValidationError { using ValidationError::ValidationError; };

struct ZeroDenominator    : NumericalError { using NumericalError::NumericalError; };
struct LandauPole         : NumericalError { using NumericalError::NumericalError; };
struct DictionarySingular : NumericalError { using NumericalError::NumericalError; };
struct NoInverse          : NumericalError { using NumericalError::NumericalError; };
struct NoSignChange       : NumericalError { using NumericalError::NumericalError; };
struct ConvergenceFailure : NumericalError { using NumericalError::NumericalError; };
struct NotAnEigenvalue    : NumericalError { using NumericalError::NumericalError; };
struct IoFailure          : NumericalError { using NumericalError::NumericalError; };

} // namespace pointscat

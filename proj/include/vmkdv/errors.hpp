#pragma once

#include <stdexcept>
#include <string>

namespace vmkdv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by d_x_inverse when the input is not a total x-derivative.
struct NotExactError : Error {
    explicit NotExactError(const std::string& what) : Error(what) {}
};

/// Thrown by numeric evaluation when the jet lacks a required derivative order.
struct MissingJetOrderError : Error {
    explicit MissingJetOrderError(const std::string& what) : Error(what) {}
};

/// Thrown when a projector or dressing denominator vanishes.
struct DegenerateDenominatorError : Error {
    explicit DegenerateDenominatorError(const std::string& what) : Error(what) {}
};

/// Thrown when a Darboux matrix is evaluated at one of its poles.
struct PoleEvaluationError : Error {
    explicit PoleEvaluationError(const std::string& what) : Error(what) {}
};

/// Thrown when a breather pole position sits on the real or imaginary axis.
struct AxisPoleError : Error {
    explicit AxisPoleError(const std::string& what) : Error(what) {}
};

/// Thrown when the breather H matrix is singular.
struct SingularHError : Error {
    explicit SingularHError(const std::string& what) : Error(what) {}
};

/// Thrown when the breather D-defining matrix is singular.
struct SingularDError : Error {
    explicit SingularDError(const std::string& what) : Error(what) {}
};

/// Thrown when a Backlund pair violates the a0 constraint in strict mode.
struct ConstraintViolationError : Error {
    explicit ConstraintViolationError(const std::string& what) : Error(what) {}
};

/// Thrown when a dressed field has a non-negligible imaginary part.
struct NonRealOutputError : Error {
    explicit NonRealOutputError(const std::string& what) : Error(what) {}
};

/// Thrown when a grid cannot accommodate the requested stencil.
struct GridTooSmallError : Error {
    explicit GridTooSmallError(const std::string& what) : Error(what) {}
};

/// Thrown on malformed configuration or parameter files.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace vmkdv

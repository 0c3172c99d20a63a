#pragma once

#include <stdexcept>
#include <string>

namespace gradpfa {

// Invalid physical input (nonpositive length, lambda <= 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Surfaces touch or cross, or a shape parameter makes the geometry meaningless.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Boundary-condition pair outside the supported set.
class UnsupportedConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Linear solve, quadrature or determinant failure.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Least-squares extraction failed (rank deficiency, non-even kernel, ...).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Multipole truncation too aggressive for the requested separation.
class TruncationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// A matching relation residual exceeded tolerance; names the failing relation.
class MatchingViolation : public std::runtime_error {
public:
    MatchingViolation(const std::string& relation, const std::string& what)
        : std::runtime_error(what), relation_(relation) {}
    const std::string& relation() const { return relation_; }

private:
    std::string relation_;
};

} // namespace gradpfa

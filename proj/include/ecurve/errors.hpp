#pragma once

#include <stdexcept>
#include <string>

namespace ecurve {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands with incompatible dimensions (vector/bivector/frame sizes).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// The curve is (numerically) stationary: ||v'|| fell below the regularity
/// floor, so arc-length quantities and frames are undefined at this instant.
class RegularityError : public Error {
public:
    RegularityError(const std::string& msg, double t) : Error(msg), t_(t) {}
    /// Time of the offending evaluation, seconds.
    double where() const noexcept { return t_; }

private:
    double t_;
};

/// Two quantities that must be compared were computed over incompatible
/// states (e.g. the frame size changed between finite-difference stencil points).
class ComparabilityError : public Error {
public:
    explicit ComparabilityError(const std::string& msg) : Error(msg) {}
};

/// The request is outside what this implementation provides (e.g. blade
/// orthogonalization beyond four vectors, derivative orders beyond the model).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

/// Evaluation requested outside a model's valid time domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Structurally malformed input (bad CSV header, unparsable field).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Well-formed input whose content is unusable (non-monotone time column,
/// ragged rows, too few samples).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

} // namespace ecurve

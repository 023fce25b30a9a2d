#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input series do not carry enough coefficients for the requested window.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// div(a, b) with order(b) > order(a).
class DivisionOrderError : public Error {
public:
    using Error::Error;
};

// Division by a series that is zero to its full precision.
class ZeroDivisorError : public Error {
public:
    using Error::Error;
};

// compose(outer, inner) with inner(0) != 0.
class CompositionOrderError : public Error {
public:
    using Error::Error;
};

// A series does not have the order required by the operation.
class OrderError : public Error {
public:
    using Error::Error;
};

// Constant term has no rational n-th root.
class IrrationalRootError : public Error {
public:
    using Error::Error;
};

// nth_root_unit applied to a series with zero constant term.
class ZeroConstantError : public Error {
public:
    using Error::Error;
};

// shift(a, k) with k < 0 and order(a) < -k.
class ShiftOrderError : public Error {
public:
    using Error::Error;
};

// A nonzero coefficient sits outside the declared support pattern.
class StrideViolationError : public Error {
public:
    using Error::Error;
};

// Two specs with different strides were combined.
class StrideMismatchError : public Error {
public:
    using Error::Error;
};

// A matrix fails the structural assumptions of a solve.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

// An exact linear system has contradictory equations.
class InconsistentError : public Error {
public:
    using Error::Error;
};

// Reconstruction needs sequence coefficients that were not supplied.
class InsufficientSequenceError : public Error {
public:
    using Error::Error;
};

// Expression text rejected by the parser; offset is the byte position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// "1/0" style division by an identically zero series in the expression language.
class DivisionByZeroSeries : public Error {
public:
    using Error::Error;
};

}  // namespace riordan

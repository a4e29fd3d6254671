#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace adaptmesh {

/// Base class for all errors raised by the library. `name()` returns a
/// stable machine-readable identifier suitable for CLI/error-channel output.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A value that must be finite is NaN or infinite.
class NonFiniteValue : public Error {
public:
    explicit NonFiniteValue(const std::string& what) : Error("NonFiniteValue", what) {}
};

/// Interpolation nodes are coincident, unsorted where order is required,
/// or otherwise unusable.
class InvalidNodes : public Error {
public:
    explicit InvalidNodes(const std::string& what) : Error("InvalidNodes", what) {}
};

/// A function argument or configuration field violates its contract.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

/// The right-hand side was evaluated outside its domain of definition
/// (or returned a non-finite value). Carries the offending evaluation point.
class DomainViolation : public Error {
public:
    DomainViolation(double t, std::vector<double> y, const std::string& what)
        : Error("DomainViolation", what), t_(t), y_(std::move(y)) {}

    double t() const noexcept { return t_; }
    const std::vector<double>& y() const noexcept { return y_; }

private:
    double t_;
    std::vector<double> y_;
};

/// Evaluation point lies outside a piece's interval beyond rounding tolerance.
class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error("OutOfRange", what) {}
};

/// The controller proposed a step below the configured minimum.
class StepTooSmall : public Error {
public:
    explicit StepTooSmall(const std::string& what) : Error("StepTooSmall", what) {}
};

/// An adaptive solve exceeded the configured step budget.
class MaxStepsExceeded : public Error {
public:
    explicit MaxStepsExceeded(const std::string& what) : Error("MaxStepsExceeded", what) {}
};

/// A reference-solution computation failed to converge.
class OracleFailure : public Error {
public:
    explicit OracleFailure(const std::string& what) : Error("OracleFailure", what) {}
};

}  // namespace adaptmesh

#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

/// Argument outside the mathematical domain of an operation (|z| >= 1, alpha <= -1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result would overflow the floating point range.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Malformed or inconsistent argument (wrong model kind, bad order, bad grammar).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed form requested for a model that has none.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input degenerates the operation, e.g. normalizing a constant.
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative refinement did not reach its tolerance. Carries the last two iterates.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_(previous), last_(last) {}

    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

/// Every restart of an extremal search failed.
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bisection endpoints do not bracket a crossing.
class BracketError : public std::runtime_error {
public:
    BracketError(const std::string& what, double value_lo, double value_hi)
        : std::runtime_error(what), value_lo_(value_lo), value_hi_(value_hi) {}

    double value_lo() const noexcept { return value_lo_; }
    double value_hi() const noexcept { return value_hi_; }

private:
    double value_lo_;
    double value_hi_;
};

}  // namespace bergman

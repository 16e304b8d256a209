#pragma once

#include <stdexcept>
#include <string>

namespace gibbsuniq {

// Quadrature did not reach the requested tolerance within its budget.
// Carries the error estimate that was actually achieved.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error_(achieved) {}
    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

// Operation is outside the supported domain (infinite range where finite is
// required, improved constant requested for the wrong model, ...).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The Mayer integral diverges or cannot be certified to converge.
class IntegrabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pair potential violates a structural requirement (negative values, ...).
class InvalidPotentialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad run configuration (file contents, incoherent settings).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A chain setup that cannot explore its state space.
class ErgodicityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gibbsuniq

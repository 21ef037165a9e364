#pragma once

#include <stdexcept>
#include <string>

namespace ietforge {

// Operands live in incompatible backends (e.g. quadratic elements over
// different fields).
class BackendMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A ball comparison came back Unknown where a decision was required.
// Callers may retry at higher precision.
class PrecisionExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact tie between the two candidate subinterval lengths during induction:
// the map has a connection and is not of Keane type.
class KeaneViolationError : public std::runtime_error {
public:
    KeaneViolationError(long step, int top_letter, int bottom_letter)
        : std::runtime_error("keane violation at step " + std::to_string(step)),
          step(step), top_letter(top_letter), bottom_letter(bottom_letter) {}

    long step;
    int top_letter;
    int bottom_letter;
};

// An iteration budget ran out (first-return search, witness evaluation).
class StepBudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point fell outside the map's domain.
class OutOfDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace ietforge

#pragma once

#include <stdexcept>
#include <string>

namespace latred {

// Raised when input data violates a documented precondition (CLI exit code 2).
struct UserError : std::runtime_error {
    explicit UserError(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis is not linearly independent, or an exact solve hit a zero pivot.
struct DegenerateBasis : UserError {
    explicit DegenerateBasis(const std::string& msg) : UserError(msg) {}
};

// A matrix handed to the inequality solver fails the M-matrix checks
// (symmetric, off-diagonals <= 0, positive definite). Signals a bug upstream.
struct NotMMatrix : std::logic_error {
    explicit NotMMatrix(const std::string& msg) : std::logic_error(msg) {}
};

struct DimensionTooLarge : UserError {
    explicit DimensionTooLarge(const std::string& msg) : UserError(msg) {}
};

// An internal invariant failed (CLI exit code 3).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace latred

#pragma once

#include <stdexcept>
#include <string>

namespace eigenflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape/validation failures on inputs.
struct DimensionError : Error {
    using Error::Error;
};

// Rank-deficient input where full rank is required (QR, linear solves).
struct RankError : Error {
    using Error::Error;
};

// Triple with a numerically non-invertible restricted operator (mu = inf).
struct IllPosedError : Error {
    using Error::Error;
};

// Great-circle endpoints in the same or antipodal projective class.
struct DegeneratePathError : Error {
    using Error::Error;
};

// Tracker exceeded its step budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

// A caller violated a documented precondition of a checked predicate.
struct ContractError : Error {
    using Error::Error;
};

// Reference eigensolver failed to converge.
struct OracleError : Error {
    using Error::Error;
};

// Malformed matrix file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace eigenflow

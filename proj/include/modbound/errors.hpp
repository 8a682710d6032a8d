#pragma once

#include <stdexcept>
#include <string>

namespace modbound {

// Caller passed an argument outside the documented domain.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A profile evaluator produced a non-finite value; message names the s location.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A request that is well-formed but degenerate (e.g. optimal polarizer at eps = 0).
struct DegenerateRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal quantity violated a guaranteed property (non-Hermitian result,
// negative variance, unitarity loss). Indicates a bug or severe ill-conditioning.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace modbound

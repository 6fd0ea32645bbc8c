#pragma once

#include <stdexcept>

namespace graphon {

// Input that violates a type invariant or a file format.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Request outside a documented guard; the caller should use a cheaper bound
// or a smaller instance instead.
class refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal numerical failure, e.g. eigensolver non-convergence.
class compute_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphon

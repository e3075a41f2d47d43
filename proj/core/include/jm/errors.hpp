#pragma once

#include <stdexcept>
#include <string>

namespace jm {

// Invalid argument or parameter outside the domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Two computations that must agree did not, or a quantity left its admissible range.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cutoff was too small for an exact answer.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigenvectors could not be attached to partitions unambiguously.
struct LabelingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jm

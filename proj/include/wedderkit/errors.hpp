#pragma once

#include <stdexcept>
#include <string>

namespace wedderkit {

// Error taxonomy mirrored by the CLI exit codes:
//   ValidationError -> 2, UnsupportedClassError -> 3, ConsistencyError -> 4.

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is well-formed but outside the class of groups/components the
// construction applies to (nontrivial twisting, non-prime-power index, ...).
struct UnsupportedClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (two independent routes disagree).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configured bound exceeded (subgroup enumeration size, iteration caps).
struct CapacityError : ValidationError {
    using ValidationError::ValidationError;
};

struct SingularMatrixError : ValidationError {
    int pivot_column;
    explicit SingularMatrixError(int col)
        : ValidationError("singular matrix: no pivot in column " + std::to_string(col)),
          pivot_column(col) {}
};

} // namespace wedderkit

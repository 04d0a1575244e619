#pragma once

#include <stdexcept>
#include <string>

namespace odgrid {

/// Raised when a job description or parameter set is rejected before any
/// computation starts (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computation goes numerically wrong (non-finite value,
/// unstable scheme, failed inversion).  CLI exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace odgrid

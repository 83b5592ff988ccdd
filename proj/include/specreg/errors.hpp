#pragma once

#include <stdexcept>
#include <string>

namespace specreg {

/// Bad configuration or usage; the CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration or block would exceed a resource cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or non-finite data (files, oracles, shapes).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed (e.g. SVD non-convergence, divergence).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace specreg

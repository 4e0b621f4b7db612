#pragma once

#include <stdexcept>
#include <string>

namespace tactile {

// File and format problems (CLI exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated invariants in configs or between rasters (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line usage (CLI exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tactile

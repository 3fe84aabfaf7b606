#pragma once

#include <stdexcept>
#include <string>

namespace presharp {

// Error taxonomy. Configuration/argument problems map to CLI exit code 2,
// everything data-related to exit code 3.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed file header or magic number.
struct FormatError : Error {
    using Error::Error;
};

/// File ended before the payload announced by its header.
struct TruncationError : Error {
    using Error::Error;
};

/// OS-level read/write failure.
struct IoError : Error {
    using Error::Error;
};

/// Operands whose dimensions do not agree.
struct ShapeError : Error {
    using Error::Error;
};

/// Values outside the operation's numeric domain (NaN pixels etc.).
struct DomainError : Error {
    using Error::Error;
};

/// Mutually inconsistent inputs (e.g. image/label counts differ).
struct ConsistencyError : Error {
    using Error::Error;
};

/// Invalid argument or option value.
struct ArgumentError : Error {
    using Error::Error;
};

/// Bad experiment configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Degenerate problem instance (e.g. all-zero weight vector).
struct DegenerateError : Error {
    using Error::Error;
};

} // namespace presharp

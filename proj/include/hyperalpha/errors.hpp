#pragma once

#include <stdexcept>
#include <string>

namespace hyperalpha {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / validation
struct EdgeWrongArity : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct InvalidDimensions : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct InfeasibleRequest : Error { using Error::Error; };

// Numeric kernels
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };

// Structure queries
struct NotConnected : Error { using Error::Error; };
struct NoCutExists : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// Contract violations on operation inputs
struct PreconditionViolated : Error { using Error::Error; };

// k < 3 where an operation requires k >= 3.
struct KTooSmall : PreconditionViolated { using PreconditionViolated::PreconditionViolated; };

/// Error raised by the .uhg parser; carries the offending 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace hyperalpha

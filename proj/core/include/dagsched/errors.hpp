#pragma once

#include <stdexcept>

namespace dagsched {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction.
struct CycleDetected : Error { using Error::Error; };
struct DanglingEdge : Error { using Error::Error; };
struct DuplicateTaskId : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct InvalidTaskId : Error { using Error::Error; };
struct NegativeExecTime : Error { using Error::Error; };
struct UnknownTask : Error { using Error::Error; };

// STG parsing and serialization.
struct MalformedRecord : Error { using Error::Error; };
struct InconsistentPredCount : Error { using Error::Error; };
struct EmptyGraph : Error { using Error::Error; };

// Schedule decoding.
struct IncompleteMapping : Error { using Error::Error; };
struct OrderNotTopological : Error { using Error::Error; };

// Benchmark harness.
struct FileNotFound : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct MismatchedSpecs : Error { using Error::Error; };

}  // namespace dagsched

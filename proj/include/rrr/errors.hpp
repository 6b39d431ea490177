#ifndef RRR_ERRORS_HPP
#define RRR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rrr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopEdgeError : Error {
    using Error::Error;
};

struct VertexOutOfRangeError : Error {
    using Error::Error;
};

struct DuplicateEdgeError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct NoPendantError : Error {
    using Error::Error;
};

struct NotUnicyclicError : Error {
    using Error::Error;
};

struct NBelowMinimumError : Error {
    using Error::Error;
};

struct EmptyClassError : Error {
    using Error::Error;
};

struct UndefinedTermError : Error {
    using Error::Error;
};

// Malformed input text; carries a 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_no(line) {}
    int line_no;
};

// Unreachable states (precision cap exhausted, broken internal invariant).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace rrr

#endif

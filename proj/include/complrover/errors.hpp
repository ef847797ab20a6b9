#pragma once

#include <stdexcept>
#include <string>

namespace complrover {

// Base class for every error the library raises deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Distinguished variables are not covered by the positive part of the query.
struct UnsafeQueryError : Error {
    using Error::Error;
};

// CONSTRUCT template uses a variable the WHERE part cannot bind.
struct IllFormedConstructError : Error {
    using Error::Error;
};

// A (G, G') pair where G is not a subgraph of G'.
struct NotAnInterpretationError : Error {
    using Error::Error;
};

// Candidate pool exceeds the subset-enumeration cap.
struct UniverseTooLargeError : Error {
    using Error::Error;
};

enum class ParseErrorKind {
    Syntax,
    BlankNodeRejected,
    ReservedNamespace,
    EmptyPattern,
};

struct ParseError : Error {
    ParseError(ParseErrorKind kind, int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), kind(kind), line(line) {}

    ParseErrorKind kind;
    int line;  // 1-based
};

}  // namespace complrover

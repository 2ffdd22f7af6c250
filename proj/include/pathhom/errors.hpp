#pragma once

#include <stdexcept>
#include <string>

namespace pathhom {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; carries a 1-based position when known.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

// A file could not be read or written.
struct IoError : Error {
    using Error::Error;
};

// A structurally invalid object was handed to an operation that requires validity
// (e.g. a non-regular or non-truncation-closed path complex).
struct InvalidInput : Error {
    using Error::Error;
};

// Join requires factors with disjoint vertex label sets.
struct NonDisjointVertices : InvalidInput {
    using InvalidInput::InvalidInput;
};

// The requested computation exceeds the configured work budget.
struct BudgetExceeded : Error {
    long long required = 0;
    long long limit = 0;
    BudgetExceeded(const std::string& msg, long long required_, long long limit_)
        : Error(msg), required(required_), limit(limit_) {}
};

// Operation does not support the requested coefficient ring.
struct UnsupportedRing : Error {
    using Error::Error;
};

// An invariant that the mathematics guarantees was observed to fail; always a bug.
struct InternalInconsistency : Error {
    using Error::Error;
};

// A target vector was not in the span of a basis although theory says it must be.
struct NotInSpan : InternalInconsistency {
    using InternalInconsistency::InternalInconsistency;
};

// A purported chain complex had some D_n * D_{n+1} != 0.
struct ComplexNotExact : InternalInconsistency {
    using InternalInconsistency::InternalInconsistency;
};

}  // namespace pathhom

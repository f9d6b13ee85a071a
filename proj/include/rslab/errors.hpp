// errors.hpp — exception hierarchy and source spans shared across the library.

#ifndef RSLAB_ERRORS_HPP
#define RSLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rslab {

// Half-open byte range [byte_begin, byte_end) with 1-based line/column of both ends.
struct SourceSpan {
    int line_begin = 1;
    int column_begin = 1;
    std::size_t byte_begin = 0;
    int line_end = 1;
    int column_end = 1;
    std::size_t byte_end = 0;

    std::string str() const {
        return std::to_string(line_begin) + ":" + std::to_string(column_begin) + "-" +
               std::to_string(line_end) + ":" + std::to_string(column_end);
    }
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (DSL or serialized values). CLI exit code 2.
class ParseError : public Error {
public:
    ParseError(std::string message, SourceSpan span)
        : Error(span.str() + ": " + message), span_(span) {}
    explicit ParseError(std::string message) : Error(std::move(message)) {}

    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_{};
};

// Well-formed input outside an operation's domain. CLI exit code 3.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Floating-point evaluation failure (near-pole input, divergence, non-finite result).
// CLI exit code 4.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace rslab

#endif

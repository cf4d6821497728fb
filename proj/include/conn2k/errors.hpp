#pragma once

#include <stdexcept>
#include <string>

namespace conn2k {

// Input text could not be parsed; `line` is 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// An operation was called outside its documented domain.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested k is outside the range the operation supports.
struct unsupported_k_error : precondition_error {
    using precondition_error::precondition_error;
};

// An invariant that should be unconditionally true failed.
// Seeing this means a bug in the library, not bad input.
struct defect_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace conn2k

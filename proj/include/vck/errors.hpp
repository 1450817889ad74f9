#pragma once

#include <stdexcept>
#include <string>

namespace vck {

// DIMACS reader failure; line is 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Caller handed us arguments outside a documented precondition.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural invariant that should hold by construction was violated.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Brute-force oracle asked to run above its configured size cap.
struct oracle_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vck

#pragma once

#include <stdexcept>
#include <string>

namespace reconf {

// Bad argument to a library operation (size mismatch, empty graph, ...).
class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based; 0 means "no line attached".
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line_(0) {}
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// The peeling cannot proceed: every remaining vertex has degree >= d.
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested parameters admit no valid configuration (e.g. k too small).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance exceeds a brute-force size guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant breach. Must never fire when preconditions hold.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace reconf

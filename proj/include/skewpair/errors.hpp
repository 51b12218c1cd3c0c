#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewpair {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (label out of range, pair not disjoint, ...).
class validation_error : public error {
public:
    using error::error;
};

/// An operation was called on input outside its stated precondition.
class precondition_error : public error {
public:
    using error::error;
};

/// A size cap is too small or a generated object exceeds a configured limit.
class size_error : public error {
public:
    using error::error;
};

/// Textual input could not be parsed; carries the 1-based offending line.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace skewpair

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace batchcodes {

/// Operand sizes disagree (vector length vs matrix shape, ragged rows).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A desk-scale guard was exceeded (enumeration would be too large).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters outside an operation's domain (zero target, index out of range, r = 0, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The operation requires a property the code does not have (e.g. systematic form).
class NotApplicable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A lookup table lacked an entry needed by a formula.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix or query text could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace batchcodes

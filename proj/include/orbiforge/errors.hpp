#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbiforge {

// Bad operand for an arithmetic or geometric operation (division by zero,
// singular basis, non-orthogonal linear part, ring mismatch, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rotation part of an isometry has order > 6.
class NonCrystallographic : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NoFixedPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Unknown model, signature, or check id.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Coset enumeration exceeded its budget. The index is unknown, not infinite.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IncompleteTable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Something that valid inputs can never produce.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(std::move(message)), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace orbiforge

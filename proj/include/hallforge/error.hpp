#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallforge {

enum class ErrorKind {
    SyntaxError,
    NotAPartition,
    UnderflowAtPart,
    OutOfRange,
    Overflow,
    NotLectureHall,
    NotOddParty,
    EvenPart,
    PartTooLarge,
    OrderViolation,
    CounterUnderflow,
    WidthTooLarge,
    GuardViolation,
    WindowMismatch,
    WindowOverflow,
    DivergentFactor,
    TableMiss,
    UnknownIdentity,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and tests)
// can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failure with the offending byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorKind::SyntaxError, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Multiset difference needed more copies of `part` than were present.
class UnderflowAtPart : public Error {
public:
    explicit UnderflowAtPart(long long part)
        : Error(ErrorKind::UnderflowAtPart, "part " + std::to_string(part)), part_(part) {}

    long long part() const noexcept { return part_; }

private:
    long long part_;
};

}  // namespace hallforge

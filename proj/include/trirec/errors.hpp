#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trirec {

// Base of all library errors. `code()` is the stable identifier that ends up
// in machine-readable reports; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Coefficient access outside the sequence domain. Never silently zero.
class IndexOutOfDomain : public Error {
public:
    IndexOutOfDomain(std::int64_t index, std::int64_t lo, std::int64_t hi)
        : Error("IndexOutOfDomain",
                "coefficient index " + std::to_string(index) + " outside domain [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          index_(index), lo_(lo), hi_(hi) {}

    std::int64_t index() const noexcept { return index_; }
    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return hi_; }

private:
    std::int64_t index_;
    std::int64_t lo_;
    std::int64_t hi_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("ParseError", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ZeroDenominator : public Error {
public:
    explicit ZeroDenominator(const std::string& message) : Error("ZeroDenominator", message) {}

    ZeroDenominator(const std::string& message, std::int64_t index)
        : Error("ZeroDenominator", message + " at index " + std::to_string(index)) {}
};

// A(i) = 0 in the evaluation range: the canonical substitution divides by A.
class ZeroPivot : public Error {
public:
    explicit ZeroPivot(std::int64_t index)
        : Error("ZeroPivot", "recurrence coefficient A(" + std::to_string(index) + ") is zero"),
          index_(index) {}

    std::int64_t index() const noexcept { return index_; }

private:
    std::int64_t index_;
};

class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& message) : Error("InvalidParams", message) {}
};

class GridTooLarge : public Error {
public:
    GridTooLarge(const std::string& grid_size, std::uint64_t limit)
        : Error("GridTooLarge", "grid of " + grid_size + " points exceeds the configured limit of " +
                                    std::to_string(limit)) {}
};

class QOutOfRange : public Error {
public:
    explicit QOutOfRange(const std::string& message) : Error("QOutOfRange", message) {}
};

// An index tuple entry outside [1, N_r]; `position` is the offending slot r (1-based).
class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t position, const std::string& message)
        : Error("IndexOutOfRange", message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& message) : Error("TooLarge", message) {}
};

}  // namespace trirec

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exptaylor {

// Bad arguments: out-of-range orders, zero lambda, mismatched dimensions.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A function was evaluated outside its domain (log of 0, division by 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Not enough data to produce a diagnostic (e.g. a terminating series has no
// ratio sequence).
class DiagnosticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the region where an identity is claimed to hold.
class RegionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message, std::string expected = {})
        : std::runtime_error(format(offset, message, expected)),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t offset, const std::string& message,
                              const std::string& expected) {
        std::string s = "parse error at offset " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) s += " (expected " + expected + ")";
        return s;
    }

    std::size_t offset_;
    std::string message_;
    std::string expected_;
};

}  // namespace exptaylor

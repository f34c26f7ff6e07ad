#ifndef CHARSTACK_ERROR_HPP
#define CHARSTACK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace charstack {

/// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial division left a nonzero remainder.
class NonExactDivision : public Error {
public:
    using Error::Error;
};

/// A half-integer Laurent polynomial had a fractional or negative exponent.
class NotAPolynomial : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t offset, std::string expected)
        : Error(message + " at offset " + std::to_string(offset) +
                (expected.empty() ? std::string{} : " (expected " + expected + ")")),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// A genus table or root datum loaded but broke one of its invariants.
class ValidationError : public Error {
public:
    ValidationError(std::string label, std::string rule, const std::string& detail)
        : Error("validation failed for '" + label + "' [" + rule + "]: " + detail),
          label_(std::move(label)), rule_(std::move(rule)) {}

    const std::string& label() const noexcept { return label_; }
    const std::string& rule() const noexcept { return rule_; }

private:
    std::string label_;
    std::string rule_;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class NotPrimePower : public Error {
public:
    using Error::Error;
};

class ResidueMismatch : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class AssertionFailure : public Error {
public:
    using Error::Error;
};

} // namespace charstack

#endif

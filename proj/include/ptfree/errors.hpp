#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptfree {

using VertexId = std::uint32_t;

/// Thrown when an input violates the P_t-free promise. Carries an induced
/// path on t vertices as evidence.
class NotPtFree : public std::runtime_error {
public:
    NotPtFree(int t, std::vector<VertexId> certificate)
        : std::runtime_error("graph contains an induced path on " + std::to_string(t) + " vertices"),
          t_(t), certificate_(std::move(certificate)) {}

    int t() const noexcept { return t_; }
    const std::vector<VertexId>& certificate() const noexcept { return certificate_; }

private:
    int t_;
    std::vector<VertexId> certificate_;
};

/// An internal guarantee failed: either a bug or a precondition the caller broke.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A brute-force oracle was asked for more than it can enumerate.
class SizeGuardExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("weight sum overflows 64-bit integer");
    }
    return r;
}

}  // namespace detail

}  // namespace ptfree

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (d' = 0, negative genus, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A size guardrail (n for S_n, d' for enumeration) was exceeded.
class GuardrailError : public Error {
  public:
    using Error::Error;
};

/// Read or write outside the exact window of a truncated series.
class WindowError : public Error {
  public:
    using Error::Error;
};

class NonInvertibleError : public Error {
  public:
    using Error::Error;
};

/// Evaluation reached <E_0(0)>, i.e. 1/varsigma(0).
class DivergentExpectation : public Error {
  public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string &expected, const std::string &found)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected +
                ", found " + found),
          position_(position), expected_(expected) {}

    std::size_t position() const noexcept { return position_; }
    const std::string &expected() const noexcept { return expected_; }

  private:
    std::size_t position_;
    std::string expected_;
};

} // namespace hz

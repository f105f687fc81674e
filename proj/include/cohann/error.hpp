#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohann {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or session text. `offset` is a byte offset for
/// polynomial text and a 1-based line number for session files.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class RingMismatch : public Error {
public:
  RingMismatch() : Error("operands live in different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

/// Raised when a Groebner computation processes more S-pairs than allowed.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(std::size_t pairs)
      : Error("Groebner budget exceeded after " + std::to_string(pairs) +
              " pairs"),
        pairs_(pairs) {}
  std::size_t pairs() const { return pairs_; }

private:
  std::size_t pairs_;
};

/// Precondition of a mathematical operation is not met
/// (non-homogeneous input to a minimal resolution, infinite algebra, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace cohann

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordlab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input data: non-bijective permutation, mismatched degrees, unknown name.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Group closure grew past the configured order cap.
class SizeLimitError : public Error {
public:
  using Error::Error;
};

// An enumeration would exceed the evaluation budget; nothing was computed.
class BudgetError : public Error {
public:
  using Error::Error;
};

// A word does not belong to the structural family an operation requires.
class ClassificationError : public Error {
public:
  using Error::Error;
};

// An invariant the implementation relies on failed; indicates a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}

  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace wordlab

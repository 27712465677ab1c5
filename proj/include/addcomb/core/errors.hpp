#pragma once

#include <stdexcept>
#include <string>

namespace addcomb {

// Bad argument shape: wrong length, k out of range, ambient mismatch.
using InvalidArgument = std::invalid_argument;

// A mathematical hypothesis of an operation does not hold
// (e.g. p not coprime to a!, modulus too small for the base-9 set).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured budget (cells, samples, overflow range) was exceeded.
// Distinct from a refutation: nothing was proven when this is thrown.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line and column.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace addcomb

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ld {

// Base of every error the kernel raises. Callers that only care about
// "the kernel gave up" catch this; the CLI maps subclasses to exit codes.
class KernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step budget ran out before a normal form was reached. Never a verdict.
class FuelExhausted : public KernelError {
 public:
  explicit FuelExhausted(std::size_t fuel)
      : KernelError("fuel exhausted after " + std::to_string(fuel) + " steps"), fuel_(fuel) {}
  std::size_t fuel() const noexcept { return fuel_; }

 private:
  std::size_t fuel_;
};

// A required type-inference step does not exist (reference to an excluded
// entry or to a variable outside the environment).
class NoTypeStep : public KernelError {
 public:
  using KernelError::KernelError;
};

// The head of a weak head reduction is a variable with nothing to unfold.
class OpenHead : public KernelError {
 public:
  using KernelError::KernelError;
};

// An application whose function reduces to a sort.
class StuckApplication : public KernelError {
 public:
  using KernelError::KernelError;
};

// rt-conversion was asked about a term without an arity.
class NoArity : public KernelError {
 public:
  using KernelError::KernelError;
};

// infer_type called on an invalid term.
class InvalidTerm : public KernelError {
 public:
  using KernelError::KernelError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnboundName : public ParseError {
 public:
  UnboundName(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("unbound name '" + name + "'", line, column), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace ld

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subq {

/// Shapes of the operands do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live over different rings (e.g. GF(5) vs GF(7)).
class BackendMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The backend cannot perform the requested operation (e.g. weak kernels over
/// the non-coherent ring).
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A candidate morphism does not satisfy the well-definedness property.
/// `counterexample()` is the failing syzygy generator in literal syntax.
class IllDefinedMorphism : public std::invalid_argument {
 public:
  IllDefinedMorphism(const std::string& what, std::string counterexample)
      : std::invalid_argument(what), counterexample_(std::move(counterexample)) {}
  const std::string& counterexample() const noexcept { return counterexample_; }

 private:
  std::string counterexample_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace subq

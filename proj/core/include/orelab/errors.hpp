#pragma once

#include <stdexcept>
#include <string>

namespace orelab {

// Stable failure taxonomy; the CLI maps each kind to its exit code.
enum class ErrorKind {
  math = 1,        // a checked identity or precondition on values failed
  io = 2,          // file / parse problems
  hypothesis = 3,  // a theorem hypothesis does not hold for the input
  cap = 4,         // expansion or enumeration budget exceeded
  internal = 5,    // a theorem-backed invariant failed: implementation bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct MathError : Error {
  explicit MathError(const std::string& what) : Error(ErrorKind::math, what) {}
};

struct DimensionError : MathError {
  explicit DimensionError(const std::string& what) : MathError(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::io, what) {}
};

struct HypothesisError : Error {
  explicit HypothesisError(const std::string& what)
      : Error(ErrorKind::hypothesis, what) {}
};

struct CapExceededError : Error {
  explicit CapExceededError(const std::string& what)
      : Error(ErrorKind::cap, what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::internal, what) {}
};

}  // namespace orelab

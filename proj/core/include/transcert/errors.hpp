#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interval division with a divisor enclosure that contains zero.
class DivisionByZeroInterval : public Error {
 public:
  DivisionByZeroInterval() : Error("DivisionByZeroInterval: divisor enclosure contains 0") {}
};

/// A real elementary function was applied outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A principal-branch complex function met the cut {Re <= 0, Im = 0}.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("SyntaxError at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifier : public SyntaxError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : SyntaxError("unknown identifier '" + name + "'", offset), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A comparison operand did not evaluate to a (numerically) real enclosure.
class NonRealComparand : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroAlpha : public Error {
 public:
  ZeroAlpha() : Error("ZeroAlpha: alpha must be non-zero") {}
};

class NonPositiveEntries : public Error {
 public:
  NonPositiveEntries() : Error("NonPositiveEntries: every entry of X must be strictly positive") {}
};

class DegenerateCurve : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(const std::string& id) : Error("UnknownClaim: " + id) {}
};

}  // namespace transcert

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loopnr/table.hpp"

namespace loopnr {

/// Axiom or argument failures reported by the validators and decision procedures.
enum class ErrorKind {
  NotSquare,
  EntryOutOfRange,
  NotLatinSquare,
  NoTwoSidedZero,
  MulNotAssociative,
  NotIdentity,
  RightDistributivityFails,
  ZeroNotLeftAbsorbing,
  AdditionNotAbelianGroup,
  LeftDistributivityFails,
  NotAHomomorphism,
  NotASubloop,
  NotIdempotent,
  NotAnIdeal,
  NotApproximatelyIdempotent,
  TargetNotARing,
  ZeroIdempotent,
  SizeMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// One violated axiom together with the elements that witness it.
struct Violation {
  ErrorKind kind;
  std::vector<Elem> witness;
  std::string detail;
};

std::string describe(const Violation& v);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation v);
  ValidationError(ErrorKind kind, std::vector<Elem> witness, std::string detail = {});

  const Violation& violation() const noexcept { return violation_; }
  ErrorKind kind() const noexcept { return violation_.kind; }
  const std::vector<Elem>& witness() const noexcept { return violation_.witness; }

 private:
  Violation violation_;
};

/// A configured size bound would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::string what_bound, std::size_t value, std::size_t limit);
  const std::string& bound() const noexcept { return bound_; }
  std::size_t value() const noexcept { return value_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  std::size_t value_;
  std::size_t limit_;
};

/// A theorem hypothesis required by a procedure does not hold for the input.
class PreconditionFailed : public std::runtime_error {
 public:
  PreconditionFailed(std::string hypothesis, std::vector<Elem> witness = {});
  const std::string& hypothesis() const noexcept { return hypothesis_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  std::string hypothesis_;
  std::vector<Elem> witness_;
};

/// Two independent computations that must agree did not. Indicates a bug,
/// never a property of the input.
class TheoremFalsified : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loopnr

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace joinmeet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public InputError {
 public:
  explicit CycleDetected(const std::string& where)
      : InputError("cover relation contains a cycle through " + where) {}
};

class UnknownLabel : public InputError {
 public:
  explicit UnknownLabel(const std::string& label)
      : InputError("unknown element label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class NotALattice : public InputError {
 public:
  enum class Reason { no_upper_bound, no_lower_bound, non_unique_lub, non_unique_glb };

  NotALattice(std::string a, std::string b, Reason reason);

  const std::string& first() const { return a_; }
  const std::string& second() const { return b_; }
  Reason reason() const { return reason_; }

 private:
  std::string a_, b_;
  Reason reason_;
};

class NotDistributive : public InputError {
 public:
  NotDistributive() : InputError("lattice is not distributive") {}
};

class NotThin : public InputError {
 public:
  NotThin() : InputError("lattice is not thin") {}
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
};

/// A computation hit a configured cap (CLI exit code 3).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// A checked mathematical invariant failed (CLI exit code 1).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class OrderGuaranteeFailed : public InvariantViolation {
 public:
  OrderGuaranteeFailed(std::string a, std::string b)
      : InvariantViolation("leading term of f[" + a + "," + b + "] is not x[" + a + "]*x[" + b +
                           "]") {}
};

class TheoremViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class HypothesisUnmet : public InvariantViolation {
 public:
  HypothesisUnmet(std::size_t index, const std::string& what)
      : InvariantViolation("initial term of toric generator " + std::to_string(index) +
                           " is not in the initial ideal of the kernel: " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class NoExpression : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace joinmeet

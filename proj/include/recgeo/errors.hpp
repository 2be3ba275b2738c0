#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial was evaluated at a point where its value is not an integer.
class NonIntegerValue : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined on the zero polynomial (e.g. root enumeration).
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A sequence definition used a polynomial that does not map Z into Z.
class IntegerValuedViolation : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class ZeroInput : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class CheckpointCorrupt : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A rational literal with a zero denominator.
class DivisionByZero : public Error {
 public:
  DivisionByZero(std::size_t offset);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace recgeo

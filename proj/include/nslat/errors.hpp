#pragma once

#include <stdexcept>
#include <string>

namespace nslat {

// Root of every error raised for bad input or an unmet precondition.
// Broken internal invariants throw std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally malformed data: non-square or non-symmetric Gram
// matrices, bad JSON, unknown fields.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class SignatureOutOfScope : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

// A halving in a Riemann-Roch expression produced a non-integer.
class ParityError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of room before deciding. Not a mathematical
// answer; rerun with a larger bound.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace nslat

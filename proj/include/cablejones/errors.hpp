#pragma once

#include <stdexcept>
#include <string>

namespace cj {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation (n below valid_from, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameters such as non-coprime cable parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed diagrams: bad PD codes, braid letters out of range, non-knot closures.
class StructureError : public Error {
 public:
  using Error::Error;
};

// A configured evaluator bound would be exceeded.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& bound, long requested, long limit)
      : Error(bound + " budget exceeded: need " + std::to_string(requested) +
              ", limit " + std::to_string(limit)),
        bound_(bound),
        requested_(requested),
        limit_(limit) {}
  const std::string& bound() const { return bound_; }
  long requested() const { return requested_; }
  long limit() const { return limit_; }

 private:
  std::string bound_;
  long requested_;
  long limit_;
};

// A hypothesis needed by a closed form or predictor does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cj

#pragma once

#include <stdexcept>
#include <string>

namespace hypereuler {

/// Argument outside the mathematical domain of an operation (e.g. zeta(s) for s < 2).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The m >= r+1 hypothesis of the Euler-sum decomposition does not hold.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A reduction would produce a divergent zeta value (argument <= 1).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A brute-force oracle was asked for an instance above its size cap.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified summation could not reach its target within the term cap.
class IterationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed; always a bug in this library.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An expression handed to the evaluator is not in evaluable form.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hypereuler

#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Precondition violated by the caller (non-unit constant term, g(0) != 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Generalized binomial coefficient requested exactly at a pole phi + beta*n = 0.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Index or truncation order outside what is known.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Two independent computations of the same object disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace riordan

#pragma once

#include <stdexcept>
#include <string>

namespace iqconc {

// Argument outside an operation's documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested size exceeds what the dense representation supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Bipartition not covered by the closed-form measures (multi-qubit sides).
class UnsupportedPartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative routine failed to converge or lost its bracket.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace iqconc

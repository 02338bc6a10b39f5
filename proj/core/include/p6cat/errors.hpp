#pragma once

#include <stdexcept>
#include <string>

namespace p6cat {

// Thrown by group_count and catalog entry points for primes the counting
// formula does not cover (p < 7 without an explicit override).
class UnsupportedPrimeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when arithmetic is requested on a PcGroup whose presentation has
// not passed the consistency check and no override was given.
class UncheckedPresentationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Thrown by the DSL compiler for specs that cannot be turned into a valid
// polycyclic presentation (definition cycles, bad generator counts, RHS
// support violations).
class MalformedSpecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration-based operation would exceed the configured
// element-operation budget.
class BudgetExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace p6cat

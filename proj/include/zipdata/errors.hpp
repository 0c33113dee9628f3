#pragma once

#include <stdexcept>
#include <string>

namespace zipdata {

// Bad caller input: elements outside a group, malformed literals, violated
// preconditions.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A map that was supposed to be a homomorphism is not one.
class invalid_homomorphism : public input_error {
 public:
  using input_error::input_error;
};

// Enumeration would exceed a configured carrier size.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a bug.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural statement that is supposed to hold for every zip datum was
// observed to fail on concrete data.
class falsified_statement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zipdata

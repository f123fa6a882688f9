#pragma once

#include <stdexcept>
#include <string>

namespace densub {

// Bad input text: duplicate edges, self-loops, non-positive weights,
// unparseable tokens.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A token that is not a number where one is required.
class ParseError : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

// Parameters outside the problem's domain (k > n, empty vertex set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Brute-force enumeration asked to exceed its vertex limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pluggable oracle broke its declared contract.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace densub

#pragma once

#include <stdexcept>
#include <string>

namespace dw {

// Invalid input: malformed tables, bad parameters, caps exceeded.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed: a Hopf axiom, an oracle
// mismatch, a tolerance blowout. Exit code 3 from the CLI, so harnesses
// can tell bugs from bad input.
class CheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dw

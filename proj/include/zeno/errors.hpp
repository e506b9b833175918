#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Raised when inputs violate a documented precondition (bad ranges, malformed
// config, unsupported parameter combinations). Maps to CLI exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request is structurally valid but exceeds a hard resource
// limit (enumeration width, panel budget). Subtype of validation_error so
// callers that only distinguish "bad input" from "numerical failure" keep
// working.
class capacity_error : public validation_error {
 public:
  explicit capacity_error(const std::string& what) : validation_error(what) {}
};

// Raised when a computation cannot meet its accuracy or sanity contract
// (non-convergent quadrature, stochasticity drift, log of zero survival).
// Maps to CLI exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zeno

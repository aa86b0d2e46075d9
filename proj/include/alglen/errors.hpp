#pragma once

#include <stdexcept>
#include <string>

namespace alglen {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or field incompatibility between operands.
struct dimension_mismatch : error {
  using error::error;
};

// Malformed text input: scalars, vectors, set specs, identity files.
struct parse_error : error {
  using error::error;
};

// Invalid algebra or identity definition (bad index, duplicate product,
// non-prime modulus, ...).
struct validation_error : error {
  using error::error;
};

// An enumeration or evaluation would exceed the configured budget.
struct budget_exceeded : error {
  using error::error;
};

}  // namespace alglen

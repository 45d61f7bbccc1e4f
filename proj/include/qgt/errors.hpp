#pragma once

#include <stdexcept>
#include <string>

namespace qgt {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact polynomial quotient does not exist; always indicates a formula or
// implementation bug upstream
struct not_divisible : error {
  using error::error;
};

// leading-term expansion found a term outside the dominant cone
struct not_in_span : error {
  using error::error;
};

// evaluation point beyond the radius of convergence, or a series failed to
// accumulate the required mass
struct non_convergent : error {
  using error::error;
};

// a probability/positivity invariant failed at a module boundary
struct invariant_violation : error {
  using error::error;
};

struct usage_error : error {
  using error::error;
};

}  // namespace qgt

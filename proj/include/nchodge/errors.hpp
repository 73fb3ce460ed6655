#pragma once

#include <stdexcept>
#include <string>

namespace nchodge {

/// Invalid or inconsistent input: malformed expressions, degree mismatches,
/// hypersurfaces that fail their validity checks, matrices that do not
/// factor the given polynomial, division by zero.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was exceeded (per-degree linear algebra cap,
/// cyclotomic order cap).  Distinct from input_error so callers can map the
/// two conditions to different exit codes.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace nchodge

#pragma once

#include <stdexcept>

namespace rdr {

// Malformed run configuration (bad JSON, unknown keys, out-of-range values).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical abort: non-finite iterate, CFL refusal, violated solution monitor.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File I/O failure or malformed image file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rdr

#pragma once

#include <stdexcept>
#include <string>

namespace sepp {

/// Malformed user input: files, configs, CLI arguments. CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A model computation cannot proceed (singular design, divergence,
/// ill-conditioned covariance). CLI exit code 1.
struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numeric intermediate went non-finite.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sepp

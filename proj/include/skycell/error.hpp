#pragma once

#include <stdexcept>
#include <string>

namespace skycell {

// Bad input data: non-finite coordinates, malformed files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration: partition ratio out of budget, bad generator spec.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse: layer mismatch in cell comparisons, oracle cap exceeded.
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

// File system failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skycell

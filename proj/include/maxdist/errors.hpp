#pragma once

#include <stdexcept>

namespace maxdist {

/// Malformed configuration or file content (CLI exit code 4).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failure (CLI exit code 2).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace maxdist

#pragma once

#include <stdexcept>
#include <string>

namespace tourlab {

/// Solver or experiment configuration rejected before any work is done.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact solver asked to handle an instance beyond its size cap.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tourlab

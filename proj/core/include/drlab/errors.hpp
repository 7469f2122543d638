#pragma once

#include <stdexcept>
#include <string>

namespace drlab {

// Invalid argument values: bad dimensions, out-of-domain parameters,
// malformed rationals, unsupported surfaces.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A combinatorial size guard tripped (|Lambda|^{2k} caps and friends).
// Guards refuse work up front; they never silently truncate.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// A quadrature grid too coarse to be exact was requested; refusing beats
// returning a silently aliased number.
struct AliasingError : std::runtime_error {
  explicit AliasingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace drlab

#pragma once

#include <stdexcept>
#include <string>

namespace paraklein {

// Invalid configuration (mode counts, cutoffs, family/system mismatch,
// dimension cap, zero safe columns). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Expression refers to a generator outside the representation's ranges.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paraklein

#pragma once

#include <stdexcept>
#include <string>

namespace galois {

/// Malformed or contract-violating input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation that could not be completed, e.g. non-generic numeric data
/// (CLI exit code 3).
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace galois

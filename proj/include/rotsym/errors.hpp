#pragma once

#include <stdexcept>
#include <string>

namespace rotsym {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// Internal cross-check failure, e.g. two X-matrix methods disagree
/// (CLI exit code 3). Indicates a build defect, not bad input.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(what) {}
};

/// A memoized table was asked to grow past its configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace rotsym

#pragma once

#include <stdexcept>
#include <string>

namespace thinkret {

/// Base error. `exit_code` maps onto the CLI's exit status.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, int exit_code = 1)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Bad input that violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what, 2) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what, 2) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what, 1) {}
};

/// Non-finite loss or parameters.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what, 3) {}
};

}  // namespace thinkret

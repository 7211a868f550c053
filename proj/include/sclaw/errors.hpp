#pragma once

#include <stdexcept>
#include <string>

namespace sclaw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where an operation is defined (|u| > R0, t < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Construction parameters violate one of the inequalities the construction relies on.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The requested object cannot be built (non-convex effective flux, missing convexity window).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Query time lies outside the window where the closed-form structure holds.
class ValidityWindowError : public Error {
 public:
  using Error::Error;
};

/// Point lies in the region near a box face where no closed form is available.
class BoundaryLayerError : public Error {
 public:
  using Error::Error;
};

class CflError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& key, int line, const std::string& message)
      : Error(format(key, line, message)), key_(key), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& key, int line, const std::string& message) {
    std::string out = "config";
    if (line > 0) out += ":" + std::to_string(line);
    if (!key.empty()) out += ": key '" + key + "'";
    return out + ": " + message;
  }

  std::string key_;
  int line_;
};

}  // namespace sclaw

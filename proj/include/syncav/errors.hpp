#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace syncav {

// Config parse/validation failure; `field` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error("config field '" + field + "': " + what),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// The configured system does not meet a scenario's structural preconditions
// (e.g. a pullback scenario on a non-invertible base).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace syncav

#pragma once

#include <stdexcept>
#include <string>

namespace immig {

/// A parameter is outside its admissible range. `field()` names the
/// configuration key (or struct field) responsible.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace immig

#pragma once

#include <stdexcept>
#include <string>

namespace sdf::experiments {

/// Invalid scenario or sweep configuration, detected before any sampling.
/// `field` names the offending setting (dotted path, may be empty).
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// File read or write failure; the message names the path.
class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace sdf::experiments

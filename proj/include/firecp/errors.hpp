#ifndef FIRECP_ERRORS_HPP
#define FIRECP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace firecp {

// Invalid parameter/geometry combinations detected before any run starts.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A dispersal table whose total mass is not 1 within tolerance.
class NormalizationError : public ConfigError {
 public:
  NormalizationError(const std::string& what, double mass)
      : ConfigError(what), total_mass(mass) {}
  double total_mass;
};

}  // namespace firecp

#endif  // FIRECP_ERRORS_HPP

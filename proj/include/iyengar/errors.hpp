#pragma once

#include <stdexcept>
#include <string>

namespace iyengar {

// Thrown when a bound's defining integral diverges for the requested
// exponent (the Holder-split bound v1 needs q > 1 + sqrt(2)/2).
class validity_error : public std::domain_error {
 public:
  explicit validity_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a reference computation cannot reach its accuracy target
// within its iteration budget. The oracle never returns a silently
// inaccurate value.
class oracle_error : public std::runtime_error {
 public:
  explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a function cannot be evaluated at the requested point or
// derivative order (pole, outside the supported domain, missing derivative).
class evaluation_error : public std::domain_error {
 public:
  explicit evaluation_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace iyengar

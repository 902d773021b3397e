#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hk {

/// Malformed input: a model or combinatorics violating one of its stated bounds.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain where a formula is defined (n < 2, r < 3, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Family/exponent combination outside the case analysis a certificate covers.
class UnsupportedCaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Intersection data that cannot come from an actual normal-crossing model.
class ModelInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration stopped at a cap before it was complete.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}
  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

}  // namespace hk

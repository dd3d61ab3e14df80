#pragma once

#include <stdexcept>
#include <string>

namespace risq {

// Bad user input: out-of-range angles, non-positive sizes, unknown config keys.
// `field` names the offending parameter when there is one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message, std::string field = {})
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Problem size exceeds the configured qubit / memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance with no nonzero coupling cannot be normalized.
class DegenerateInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace risq

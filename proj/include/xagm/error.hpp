#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xagm {

enum class ErrorKind {
  NonFinite,
  OrderViolation,
  SumViolation,
  NegativeRadicand,
  NonPositiveRadicand,
  DomainError,
  ParamError,
  NonConvergence,
  SlowConvergence,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Shortest round-trip text for a double, for error messages.
std::string show(double v);

/// Every failure raised by the library carries one of the kinds above; the
/// message names the violated constraint.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xagm

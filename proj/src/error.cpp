#include "xagm/error.hpp"

#include <charconv>

namespace xagm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::SumViolation: return "SumViolation";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParamError: return "ParamError";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
  }
  return "Unknown";
}

std::string show(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace xagm

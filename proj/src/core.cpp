#include "xagm/core.hpp"

#include <cmath>
#include <string>

#include "xagm/error.hpp"

namespace xagm {

namespace {

struct TripleCheck {
  ErrorKind kind;
  const char* message;
};

// On failure, reports the first violated constraint, checked in the order
// below.
bool check_triple(double a, double b, double c, TripleCheck& failure) noexcept {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    failure = {ErrorKind::NonFinite, "a, b, c must be finite"};
    return false;
  }
  if (!(b > 0.0)) {
    failure = {ErrorKind::OrderViolation, "b > 0 violated"};
    return false;
  }
  if (c < 0.0) {
    failure = {ErrorKind::OrderViolation, "c >= 0 violated"};
    return false;
  }
  if (!(a > b)) {
    failure = {ErrorKind::OrderViolation, "a > b violated"};
    return false;
  }
  if (b < c) {
    failure = {ErrorKind::OrderViolation, "b >= c violated"};
    return false;
  }
  if (!(a > b + c)) {
    failure = {ErrorKind::SumViolation, "a > b + c violated"};
    return false;
  }
  return true;
}

}  // namespace

Triple validate_triple(double a, double b, double c) {
  TripleCheck failure{};
  if (!check_triple(a, b, c, failure)) {
    throw Error(failure.kind, std::string(failure.message) + " (a=" + show(a) +
                                  ", b=" + show(b) + ", c=" + show(c) + ")");
  }
  return Triple{a, b, c};
}

bool is_valid_triple(double a, double b, double c) noexcept {
  TripleCheck failure{};
  return check_triple(a, b, c, failure);
}

RatioPair ratios(const Triple& t) noexcept {
  return RatioPair{(t.b + t.c) / t.a, (t.b - t.c) / t.a};
}

ModuliPair make_moduli(double kappa, double lambda) {
  if (!std::isfinite(kappa) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::NonFinite, "kappa and lambda must be finite");
  }
  if (!(lambda >= 0.0 && lambda <= kappa && kappa < 1.0)) {
    throw Error(ErrorKind::DomainError, "0 <= lambda <= kappa < 1 violated (kappa=" +
                                            show(kappa) +
                                            ", lambda=" + show(lambda) + ")");
  }
  return ModuliPair{kappa, lambda};
}

AnglePair moduli_to_angles(const ModuliPair& m) noexcept {
  return AnglePair{std::asin(std::sqrt(m.kappa)), std::asin(std::sqrt(m.lambda))};
}

ModuliPair angles_to_moduli(const AnglePair& ap) noexcept {
  const double s = std::sin(ap.alpha);
  const double t = std::sin(ap.eps);
  return ModuliPair{s * s, t * t};
}

double clamped_sqrt(double r) {
  if (r >= 0.0) return std::sqrt(r);
  if (r >= -kRadicandClamp) return 0.0;
  throw Error(ErrorKind::NegativeRadicand, "radicand " + show(r) + " below -1e-14");
}

}  // namespace xagm

#include "xagm/agm.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "xagm/error.hpp"

namespace xagm {

double agm_mean(double a, double b, double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::DomainError, "agm_mean requires finite a, b > 0");
  }
  if (!(tol >= kDefaultTol)) {
    throw Error(ErrorKind::DomainError, "tolerance must be at least 4 machine epsilon");
  }
  if (a < b) std::swap(a, b);

  for (int n = 0; n <= kMaxIterations; ++n) {
    if (std::abs(a - b) <= tol * a) return (a + b) / 2;
    if (n == kMaxIterations) break;
    const double next_a = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next_a;
  }
  throw Error(ErrorKind::NonConvergence,
              "agm_mean did not converge in " + std::to_string(kMaxIterations) + " iterations");
}

double elliptic_k(EllipticModulus k) {
  if (!(k.k >= 0.0 && k.k < 1.0)) {
    throw Error(ErrorKind::DomainError, "elliptic_k requires 0 <= k < 1, got " + show(k.k));
  }
  const double kp = std::sqrt((1.0 - k.k) * (1.0 + k.k));
  return std::numbers::pi / (2.0 * agm_mean(1.0, kp));
}

LandenStep landen_descend(EllipticModulus k0) {
  if (!(k0.k >= 0.0 && k0.k < 1.0)) {
    throw Error(ErrorKind::DomainError,
                "landen_descend requires 0 <= k < 1, got " + show(k0.k));
  }
  const double kp = std::sqrt((1.0 - k0.k) * (1.0 + k0.k));
  // (1 - k') / (1 + k') rewritten as k^2 / (1 + k')^2: no cancellation for small k.
  const double den = 1.0 + kp;
  return LandenStep{EllipticModulus{(k0.k / den) * (k0.k / den)}, den / 2};
}

}  // namespace xagm

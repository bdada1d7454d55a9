#pragma once

#include <limits>

namespace xagm {

inline constexpr double kDefaultTol = 4.0 * std::numeric_limits<double>::epsilon();
inline constexpr int kMaxIterations = 64;

/// Modulus k of K(k); 0 <= k < 1.
struct EllipticModulus {
  double k = 0.0;
};

/// Gauss arithmetic-geometric mean agM(a, b).
///
/// Iterates a' = (a + b)/2, b' = sqrt(ab) until |a - b| <= tol * a and returns
/// (a + b)/2 of the final pair.  Arguments are swapped if b > a.
/// Throws Error{DomainError} for non-positive or non-finite input or
/// tol < 4 eps, Error{NonConvergence} after kMaxIterations.
double agm_mean(double a, double b, double tol = kDefaultTol);

/// Complete elliptic integral of the first kind, K(k) = pi / (2 agM(1, sqrt(1 - k^2))).
double elliptic_k(EllipticModulus k);

struct LandenStep {
  EllipticModulus k1;
  /// K(k1) = factor * K(k0).
  double factor = 1.0;
};

/// Descending Landen transformation k0 -> k1 = (1 - k')/(1 + k'), k' = sqrt(1 - k0^2).
LandenStep landen_descend(EllipticModulus k0);

}  // namespace xagm

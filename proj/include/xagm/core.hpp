#pragma once

// Value types shared by the mean, series and quadrature modules.

namespace xagm {

/// Iteration state (a, b, c).  A Triple obtained from validate_triple
/// satisfies a > b > 0, b >= c >= 0 and a > b + c.  States produced later
/// by the iteration may reach a == b and c == 0.
struct Triple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// xi = (b + c) / a, eta = (b - c) / a.
struct RatioPair {
  double xi = 0.0;
  double eta = 0.0;

  friend bool operator==(const RatioPair&, const RatioPair&) = default;
};

/// Parameters of the quartic integral, 0 <= lambda <= kappa < 1.
struct ModuliPair {
  double kappa = 0.0;
  double lambda = 0.0;

  friend bool operator==(const ModuliPair&, const ModuliPair&) = default;
};

/// kappa = sin^2(alpha), lambda = sin^2(eps); radians, 0 <= eps <= alpha < pi/2.
struct AnglePair {
  double alpha = 0.0;
  double eps = 0.0;

  friend bool operator==(const AnglePair&, const AnglePair&) = default;
};

/// Throws Error{NonFinite | OrderViolation | SumViolation}.
Triple validate_triple(double a, double b, double c);

/// True exactly when validate_triple(a, b, c) would succeed.
bool is_valid_triple(double a, double b, double c) noexcept;

RatioPair ratios(const Triple& t) noexcept;

/// Checked construction; throws Error{DomainError} unless 0 <= lambda <= kappa < 1.
ModuliPair make_moduli(double kappa, double lambda);

AnglePair moduli_to_angles(const ModuliPair& m) noexcept;
ModuliPair angles_to_moduli(const AnglePair& ap) noexcept;

/// Largest negative radicand still treated as a rounding artefact.
inline constexpr double kRadicandClamp = 1e-14;

/// sqrt(r) with r in [-kRadicandClamp, 0) clamped to zero.  Anything more
/// negative (or NaN) throws Error{NegativeRadicand}.
double clamped_sqrt(double r);

}  // namespace xagm

#pragma once

namespace xagm {

struct Gauss2F1Params {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;
};

struct AppellF1Params {
  double alpha = 0.0;
  double beta = 0.0;
  double beta_prime = 0.0;
  double gamma = 1.0;
};

/// Stopping controls for the series.  For appell_f1 max_terms counts
/// diagonals m + n = const rather than individual terms.
struct SeriesBudget {
  double rel_tol = 1e-15;
  long max_terms = 1'000'000;

  static SeriesBudget gauss_default() { return {1e-15, 1'000'000}; }
  static SeriesBudget appell_default() { return {1e-15, 4000}; }
};

/// Largest |z| (exclusive) accepted by the direct 2F1 series.
inline constexpr double kGaussSeriesLimit = 0.999;
/// Largest max(|x|, |y|) (exclusive) accepted by the direct F1 series.
inline constexpr double kAppellSeriesLimit = 0.95;

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1.  May overflow to inf.
double pochhammer(double x, unsigned n) noexcept;

/// 2F1(alpha, beta; gamma; z) by direct summation for |z| < 0.999.
///
/// Terms are generated from the ratio
///   t_{n+1} / t_n = (alpha + n)(beta + n) / ((gamma + n)(n + 1)) z
/// and summation stops once three consecutive terms are below
/// rel_tol |sum|.  Throws DomainError (|z| out of range), ParamError (gamma a
/// non-positive integer or bad budget), SlowConvergence (budget exhausted).
double gauss_2f1(const Gauss2F1Params& p, double z,
                 const SeriesBudget& budget = SeriesBudget::gauss_default());

/// Appell F1(alpha; beta, beta'; gamma; x, y) by direct double summation,
/// max(|x|, |y|) < 0.95.
///
/// The double series is accumulated by diagonals d = m + n.  Each diagonal
/// contributes (alpha)_d / (gamma)_d * sum_{m+n=d} U_m V_n with
/// U_m = (beta)_m x^m / m!, V_n = (beta')_n y^n / n!.  Summation stops once
/// three consecutive diagonals have absolute mass below rel_tol |sum|.
/// The result is bitwise symmetric under (beta, x) <-> (beta', y).
double appell_f1(const AppellF1Params& p, double x, double y,
                 const SeriesBudget& budget = SeriesBudget::appell_default());

/// F1 with gamma = beta + beta' through a single 2F1:
///   y <= x: (1 - y)^(-alpha) 2F1(alpha, beta;  gamma; (x - y)/(1 - y))
///   x <  y: (1 - x)^(-alpha) 2F1(alpha, beta'; gamma; (y - x)/(1 - x))
/// for 0 <= x, y < 1.  Throws ParamError if |gamma - beta - beta'| > 1e-14,
/// DomainError outside [0, 1)^2, and whatever gauss_2f1 throws.
double f1_reduce(const AppellF1Params& p, double x, double y,
                 const SeriesBudget& budget = SeriesBudget::gauss_default());

struct PdeResidual {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Residuals of the two partial differential equations satisfied by F1,
///   x(1-x) F_xx + y(1-x) F_xy + [gamma - (alpha+beta+1) x] F_x - beta y F_y - alpha beta F = 0
///   y(1-y) F_yy + x(1-y) F_xy + [gamma - (alpha+beta'+1) y] F_y - beta' x F_x - alpha beta' F = 0
/// with derivatives from central differences of appell_f1 at step h.  Each
/// residual is divided by the largest magnitude among its own terms.
/// Requires h in [1e-5, 1e-3] and the 2h-neighbourhood of (x, y) inside the
/// series domain; DomainError otherwise.
PdeResidual f1_pde_residual(const AppellF1Params& p, double x, double y, double h);

}  // namespace xagm

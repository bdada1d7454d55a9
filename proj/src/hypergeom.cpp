#include "xagm/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "xagm/error.hpp"

namespace xagm {

namespace {

bool is_nonpositive_integer(double g) noexcept { return g <= 0.0 && g == std::floor(g); }

void check_budget(const SeriesBudget& budget) {
  if (!(budget.rel_tol >= std::numeric_limits<double>::epsilon()) || budget.max_terms < 1) {
    throw Error(ErrorKind::ParamError, "series budget needs rel_tol >= eps and max_terms >= 1");
  }
}

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || is_nonpositive_integer(gamma)) {
    throw Error(ErrorKind::ParamError,
                "gamma must not be a non-positive integer, got " + show(gamma));
  }
}

// Consecutive negligible terms (or diagonals) required before stopping.
constexpr int kQuietRun = 3;

}  // namespace

double pochhammer(double x, unsigned n) noexcept {
  double p = 1.0;
  for (unsigned i = 0; i < n; ++i) p *= x + i;
  return p;
}

double gauss_2f1(const Gauss2F1Params& p, double z, const SeriesBudget& budget) {
  check_budget(budget);
  check_gamma(p.gamma);
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw Error(ErrorKind::ParamError, "2F1 parameters must be finite");
  }
  if (!(std::abs(z) < kGaussSeriesLimit)) {
    throw Error(ErrorKind::DomainError,
                "2F1 series requires |z| < 0.999, got z=" + show(z));
  }

  double term = 1.0;
  double sum = 1.0;
  int quiet = 0;
  for (long n = 0; n < budget.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (p.alpha + dn) * (p.beta + dn) / ((p.gamma + dn) * (dn + 1.0)) * z;
    sum += term;
    quiet = std::abs(term) <= budget.rel_tol * std::abs(sum) ? quiet + 1 : 0;
    if (quiet == kQuietRun) return sum;
  }
  throw Error(ErrorKind::SlowConvergence,
              "2F1 series not converged after " + std::to_string(budget.max_terms) + " terms");
}

double appell_f1(const AppellF1Params& p, double x, double y, const SeriesBudget& budget) {
  check_budget(budget);
  check_gamma(p.gamma);
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.beta_prime)) {
    throw Error(ErrorKind::ParamError, "F1 parameters must be finite");
  }
  if (!(std::max(std::abs(x), std::abs(y)) < kAppellSeriesLimit)) {
    throw Error(ErrorKind::DomainError, "F1 series requires max(|x|, |y|) < 0.95, got x=" +
                                            show(x) + ", y=" + show(y));
  }

  // u[m] = (beta)_m x^m / m!, v[n] = (beta')_n y^n / n!
  std::vector<double> u{1.0};
  std::vector<double> v{1.0};
  double coeff = 1.0;  // (alpha)_d / (gamma)_d
  double sum = 1.0;
  int quiet = 0;
  for (long d = 1; d <= budget.max_terms; ++d) {
    const double prev = static_cast<double>(d - 1);
    u.push_back(u.back() * (p.beta + prev) / (prev + 1.0) * x);
    v.push_back(v.back() * (p.beta_prime + prev) / (prev + 1.0) * y);
    coeff *= (p.alpha + prev) / (p.gamma + prev);

    // Pairs (m, d-m) and (d-m, m) are added together so that swapping the
    // roles of u and v leaves every rounding step unchanged.
    const auto dd = static_cast<std::size_t>(d);
    double inner = 0.0;
    double mass = 0.0;
    std::size_t m = 0;
    for (; m < dd - m; ++m) {
      const double lo = u[m] * v[dd - m];
      const double hi = u[dd - m] * v[m];
      inner += lo + hi;
      mass += std::abs(lo) + std::abs(hi);
    }
    if (m == dd - m) {
      const double mid = u[m] * v[m];
      inner += mid;
      mass += std::abs(mid);
    }

    sum += coeff * inner;
    quiet = std::abs(coeff) * mass <= budget.rel_tol * std::abs(sum) ? quiet + 1 : 0;
    if (quiet == kQuietRun) return sum;
  }
  throw Error(ErrorKind::SlowConvergence, "F1 series not converged after " +
                                              std::to_string(budget.max_terms) + " diagonals");
}

double f1_reduce(const AppellF1Params& p, double x, double y, const SeriesBudget& budget) {
  if (!(std::abs(p.gamma - (p.beta + p.beta_prime)) <= 1e-14)) {
    throw Error(ErrorKind::ParamError, "reduction requires gamma = beta + beta'");
  }
  if (!(x >= 0.0 && x < 1.0 && y >= 0.0 && y < 1.0)) {
    throw Error(ErrorKind::DomainError, "reduction requires 0 <= x, y < 1, got x=" +
                                            show(x) + ", y=" + show(y));
  }
  if (y <= x) {
    return std::pow(1.0 - y, -p.alpha) *
           gauss_2f1({p.alpha, p.beta, p.gamma}, (x - y) / (1.0 - y), budget);
  }
  return std::pow(1.0 - x, -p.alpha) *
         gauss_2f1({p.alpha, p.beta_prime, p.gamma}, (y - x) / (1.0 - x), budget);
}

PdeResidual f1_pde_residual(const AppellF1Params& p, double x, double y, double h) {
  if (!(h >= 1e-5 && h <= 1e-3)) {
    throw Error(ErrorKind::DomainError, "finite-difference step must lie in [1e-5, 1e-3]");
  }
  if (!(std::abs(x) + 2 * h < kAppellSeriesLimit && std::abs(y) + 2 * h < kAppellSeriesLimit)) {
    throw Error(ErrorKind::DomainError, "stencil around (x, y) leaves the F1 series domain");
  }

  const auto f = [&](double dx, double dy) { return appell_f1(p, x + dx, y + dy); };
  const double f0 = f(0, 0);
  const double fxp = f(h, 0), fxm = f(-h, 0);
  const double fyp = f(0, h), fym = f(0, -h);
  const double fpp = f(h, h), fpm = f(h, -h), fmp = f(-h, h), fmm = f(-h, -h);

  const double fx = (fxp - fxm) / (2 * h);
  const double fy = (fyp - fym) / (2 * h);
  const double fxx = (fxp - 2 * f0 + fxm) / (h * h);
  const double fyy = (fyp - 2 * f0 + fym) / (h * h);
  const double fxy = (fpp - fpm - fmp + fmm) / (4 * h * h);

  const auto normalized = [](std::initializer_list<double> terms) {
    double total = 0.0;
    double scale = 0.0;
    for (double t : terms) {
      total += t;
      scale = std::max(scale, std::abs(t));
    }
    return scale > 0.0 ? total / scale : 0.0;
  };

  const double a = p.alpha, b = p.beta, bp = p.beta_prime, g = p.gamma;
  return PdeResidual{
      normalized({x * (1 - x) * fxx, y * (1 - x) * fxy, (g - (a + b + 1) * x) * fx, -b * y * fy,
                  -a * b * f0}),
      normalized({y * (1 - y) * fyy, x * (1 - y) * fxy, (g - (a + bp + 1) * y) * fy,
                  -bp * x * fx, -a * bp * f0}),
  };
}

}  // namespace xagm

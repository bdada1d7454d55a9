#pragma once

// Test-only reference computations.  Nothing here calls into the library's
// evaluation paths: the quadratures and special functions come from
// Boost.Math, and the iteration is a line-by-line transcription of the
// reference program.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

/// Row printed by the reference program, extended with the moduli it
/// computes from that row.
struct ReferenceRow {
  double a, b, c;
  double k0, l0, k1, l1;
};

/// Transcription of the reference program for the extended mean.  Runs
/// exactly `steps` iterations with no stopping test.
inline std::vector<ReferenceRow> reference_trace(double a0, double b0, double c0, int steps) {
  std::vector<ReferenceRow> rows;
  for (int n = 0; n < steps; ++n) {
    const double x = (b0 + c0) / a0, y = (b0 - c0) / a0;
    double dum1 = 1 - x * y;
    double dum2 = std::sqrt((1 - x * x) * (1 - y * y));
    const double K0 = (dum1 + dum2) / 2;
    const double L0 = (dum1 - dum2) / 2;

    dum1 = 1 - x * y;
    dum2 = (1 + x) * (1 + y);
    const double K1 = std::pow(dum1 / dum2, 2);
    dum1 = (x - y) * (x - y);
    dum2 = 2 * (1 + x) * (1 + y) * (x + y);
    const double L1 = dum1 / dum2;

    rows.push_back({a0, b0, c0, K0, L0, K1, L1});

    dum1 = std::sqrt(1 - L0) + std::sqrt(1 - K0);
    dum2 = 2 * std::sqrt(1 - L1);
    const double a1 = a0 * dum1 / dum2;
    const double b1 = a1 * std::sqrt((1 - K1) * (1 - L1));
    const double c1 = a1 * std::sqrt(K1 * L1);
    a0 = a1;
    b0 = b1;
    c0 = c1;
  }
  return rows;
}

/// Distance in units in the last place between two finite doubles.
inline std::uint64_t ulp_distance(double x, double y) {
  if (x == y) return 0;
  const auto key = [](double v) {
    std::int64_t i;
    std::memcpy(&i, &v, sizeof v);
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
  };
  const std::int64_t kx = key(x), ky = key(y);
  return kx > ky ? static_cast<std::uint64_t>(kx - ky) : static_cast<std::uint64_t>(ky - kx);
}

inline double rel_diff(double x, double y) {
  const double s = std::max(std::abs(x), std::abs(y));
  return s == 0.0 ? 0.0 : std::abs(x - y) / s;
}

/// (1/pi) int_0^1 du / sqrt(u (1-u)(1 - kappa u)(1 - lambda u)) integrated in
/// u directly; tanh-sinh copes with the endpoint singularities.
inline double u_integral(double kappa, double lambda) {
  // Split at 1/2 and reflect the upper half so that both singular endpoints
  // sit at zero, where the distance to the endpoint is exact.
  boost::math::quadrature::tanh_sinh<double> ts;
  const auto g = [=](double u, double one_minus_u) {
    return 1.0 / std::sqrt(u * one_minus_u * (1 - kappa * u) * (1 - lambda * u));
  };
  const double lower = ts.integrate([&](double u) { return g(u, 1.0 - u); }, 0.0, 0.5);
  const double upper = ts.integrate([&](double v) { return g(1.0 - v, v); }, 0.0, 0.5);
  return (lower + upper) / std::numbers::pi;
}

/// K(k) from Boost (Carlson R_F based, independent of the AGM).
inline double elliptic_k(double k) { return boost::math::ellint_1(k); }

/// 2F1 by raw Pochhammer quotients, for modest |z| only.
inline double gauss_2f1_raw(double a, double b, double c, double z, int terms = 4000) {
  long double sum = 0.0L;
  long double pa = 1, pb = 1, pc = 1, fact = 1, zn = 1;
  for (int n = 0; n < terms; ++n) {
    sum += pa * pb / pc * zn / fact;
    pa *= a + n;
    pb *= b + n;
    pc *= c + n;
    fact *= n + 1;
    zn *= z;
    if (!std::isfinite(static_cast<double>(pa * pb / pc / fact))) break;
  }
  return static_cast<double>(sum);
}

/// Appell F1 from its Euler integral (gamma > alpha > 0, x, y < 1).
inline double appell_f1_euler(double alpha, double beta, double beta_prime, double gamma,
                              double x, double y) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const auto g = [=](double u, double one_minus_u) {
    return std::pow(u, alpha - 1) * std::pow(one_minus_u, gamma - alpha - 1) *
           std::pow(1 - x * u, -beta) * std::pow(1 - y * u, -beta_prime);
  };
  const double integral = ts.integrate([&](double u) { return g(u, 1.0 - u); }, 0.0, 0.5) +
                          ts.integrate([&](double v) { return g(1.0 - v, v); }, 0.0, 0.5);
  const double norm = boost::math::tgamma(gamma) /
                      (boost::math::tgamma(alpha) * boost::math::tgamma(gamma - alpha));
  return norm * integral;
}

/// Random valid triple with a = scale, xi <= xi_max and kappa0 <= kappa_max.
/// kappa0 is computed here in long double, independently of the library.
inline void random_triple(std::mt19937_64& rng, double& a, double& b, double& c,
                          double xi_max = 0.95, double kappa_max = 0.94) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    a = 1.0;
    b = unit(rng);
    c = b * unit(rng);
    if (!(b > 0.0) || !(b + c < a)) continue;
    const long double xi = (static_cast<long double>(b) + c) / a;
    const long double eta = (static_cast<long double>(b) - c) / a;
    if (xi > xi_max) continue;
    const long double kappa = (1 - xi * eta + std::sqrt((1 - xi * xi) * (1 - eta * eta))) / 2;
    if (kappa > kappa_max) continue;
    return;
  }
}

}  // namespace oracle

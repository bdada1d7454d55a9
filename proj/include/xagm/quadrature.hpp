#pragma once

#include <functional>

#include "xagm/core.hpp"

namespace xagm {

struct QuadratureConfig {
  double rel_tol = 1e-13;
  int max_nodes = 4096;
};

inline constexpr int kMinNodes = 16;
inline constexpr int kMaxNodes = 4096;

using Integrand = std::function<double(double)>;

/// n-point Gauss-Legendre estimate of the integral of f over [lo, hi].
/// Nodes and weights are computed once per order and cached.
double gauss_legendre(const Integrand& f, double lo, double hi, int n);

/// Gauss-Legendre with node doubling 16, 32, ... until successive estimates
/// agree to rel_tol.  Throws NonConvergence when max_nodes is reached.
double integrate(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg = {});

/// (1/pi) int_0^1 du / sqrt(u (1-u) (1 - kappa u)(1 - lambda u)), evaluated in
/// the form (2/pi) int_0^{pi/2} dth / sqrt((1 - kappa sin^2)(1 - lambda sin^2))
/// obtained with u = sin^2 th.
double integral_u_form(const ModuliPair& m, const QuadratureConfig& cfg = {});

/// (2a/pi) int_0^{pi/2} dth / sqrt(a^2 cos^2 + b^2 sin^2 - c^2 cos^2 sin^2).
/// Throws NonPositiveRadicand if the radicand is not positive at a node.
double integral_theta_form(const Triple& t, const QuadratureConfig& cfg = {});

}  // namespace xagm

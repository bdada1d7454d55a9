#include "xagm/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "xagm/error.hpp"

namespace xagm {

namespace {

// Nodes in (0, 1) with weights; the rule is symmetric about zero.  For odd n
// the first entry is the centre node x = 0.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Rule build_rule(int n) {
  Rule rule;
  const int half = (n + 1) / 2;
  rule.nodes.resize(static_cast<std::size_t>(half));
  rule.weights.resize(static_cast<std::size_t>(half));
  for (int i = 0; i < half; ++i) {
    // Largest root first; initial guess from the Tricomi asymptotics.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 0.5 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
    }
    // Derivative at the polished root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    // Store in ascending order with the (possible) centre node first.
    const auto slot = static_cast<std::size_t>(half - 1 - i);
    rule.nodes[slot] = x;
    rule.weights[slot] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) rule.nodes[0] = 0.0;
  return rule;
}

std::shared_ptr<const Rule> rule_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Rule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const Rule>(build_rule(n));
  return slot;
}

void check_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol >= 1e-15) || cfg.max_nodes < kMinNodes || cfg.max_nodes > kMaxNodes) {
    throw Error(ErrorKind::ParamError,
                "quadrature config needs rel_tol >= 1e-15 and 16 <= max_nodes <= 4096");
  }
}

}  // namespace

double gauss_legendre(const Integrand& f, double lo, double hi, int n) {
  if (n < 1) throw Error(ErrorKind::ParamError, "node count must be positive");
  const auto rule = rule_for(n);
  const double half = (hi - lo) / 2;
  const double mid = (hi + lo) / 2;
  double sum = 0.0;
  std::size_t i = 0;
  if (n % 2 == 1) {
    sum += rule->weights[0] * f(mid);
    i = 1;
  }
  for (; i < rule->nodes.size(); ++i) {
    const double dx = half * rule->nodes[i];
    sum += rule->weights[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * sum;
}

double integrate(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg) {
  check_config(cfg);
  double prev = gauss_legendre(f, lo, hi, kMinNodes);
  for (int n = 2 * kMinNodes; n <= cfg.max_nodes; n *= 2) {
    const double cur = gauss_legendre(f, lo, hi, n);
    if (std::abs(cur - prev) <= cfg.rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw Error(ErrorKind::NonConvergence,
              "Gauss-Legendre estimates not stable at " + std::to_string(cfg.max_nodes) + " nodes");
}

double integral_u_form(const ModuliPair& m, const QuadratureConfig& cfg) {
  if (!(m.kappa >= 0.0 && m.kappa < 1.0 && m.lambda >= 0.0 && m.lambda < 1.0)) {
    throw Error(ErrorKind::DomainError, "u-form integral requires kappa, lambda in [0, 1)");
  }
  const double kappa = m.kappa;
  const double lambda = m.lambda;
  const auto integrand = [kappa, lambda](double theta) {
    const double s = std::sin(theta);
    const double s2 = s * s;
    return 1.0 / std::sqrt((1.0 - kappa * s2) * (1.0 - lambda * s2));
  };
  return 2.0 / std::numbers::pi * integrate(integrand, 0.0, std::numbers::pi / 2, cfg);
}

double integral_theta_form(const Triple& t, const QuadratureConfig& cfg) {
  const Triple v = validate_triple(t.a, t.b, t.c);
  const double a2 = v.a * v.a;
  const double b2 = v.b * v.b;
  const double c2 = v.c * v.c;
  const auto integrand = [a2, b2, c2](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double s2 = s * s;
    const double cs2 = c * c;
    const double r = a2 * cs2 + b2 * s2 - c2 * cs2 * s2;
    if (!(r > 0.0)) {
      throw Error(ErrorKind::NonPositiveRadicand,
                  "theta-form radicand " + show(r) + " at theta=" + show(theta));
    }
    return 1.0 / std::sqrt(r);
  };
  return 2.0 * v.a / std::numbers::pi * integrate(integrand, 0.0, std::numbers::pi / 2, cfg);
}

}  // namespace xagm

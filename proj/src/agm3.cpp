#include "xagm/agm3.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xagm {

namespace {

// The arithmetic below follows the reference transcription operation by
// operation so that traces reproduce bit for bit; do not reassociate.

ModuliPair moduli_from_ratios(const RatioPair& r) {
  const double x = r.xi;
  const double y = r.eta;
  const double base = 1.0 - x * y;
  const double root = clamped_sqrt((1.0 - x * x) * (1.0 - y * y));
  return ModuliPair{(base + root) / 2, std::max((base - root) / 2, 0.0)};
}

struct Advance {
  ModuliPair moduli;
  ModuliPair next_moduli;
  Triple next;
};

Advance advance(const Triple& t) {
  const RatioPair r = ratios(t);
  const ModuliPair cur = moduli_from_ratios(r);
  const ModuliPair nxt = next_moduli(r);

  if (t.c == 0.0) {
    // Plain Gauss step; lambda stays identically zero.
    return Advance{cur, nxt, Triple{(t.a + t.b) / 2, std::sqrt(t.a * t.b), 0.0}};
  }

  const double num = std::sqrt(1.0 - cur.lambda) + std::sqrt(1.0 - cur.kappa);
  const double den = 2.0 * std::sqrt(1.0 - nxt.lambda);
  const double a1 = t.a * num / den;
  const double b1 = a1 * std::sqrt((1.0 - nxt.kappa) * (1.0 - nxt.lambda));
  const double c1 = a1 * std::sqrt(nxt.kappa * nxt.lambda);
  return Advance{cur, nxt, Triple{a1, b1, c1}};
}

bool is_converged(const Triple& t, double tol) noexcept {
  return std::abs(t.a - t.b) <= tol * t.a && t.c <= tol * t.a;
}

}  // namespace

ModuliPair moduli_from_triple(const Triple& t) { return moduli_from_ratios(ratios(t)); }

ModuliPair next_moduli(const RatioPair& r) {
  const double x = r.xi;
  const double y = r.eta;
  if (x + y == 0.0) {
    throw Error(ErrorKind::DomainError, "next_moduli requires xi + eta > 0");
  }
  const double q = (1.0 - x * y) / ((1.0 + x) * (1.0 + y));
  const double kappa = q * q;
  const double lambda = ((x - y) * (x - y)) / (2.0 * (1.0 + x) * (1.0 + y) * (x + y));
  return ModuliPair{kappa, lambda};
}

ModuliPair next_moduli_via_angles(const ModuliPair& m) {
  if (!(m.lambda >= 0.0 && m.kappa > m.lambda && m.kappa < 1.0)) {
    throw Error(ErrorKind::DomainError,
                "next_moduli_via_angles requires 0 <= lambda < kappa < 1 (kappa=" +
                    show(m.kappa) + ", lambda=" + show(m.lambda) + ")");
  }
  const AnglePair ang = moduli_to_angles(m);
  const double tp = std::tan((ang.alpha + ang.eps) / 2);
  const double tm = std::tan((ang.alpha - ang.eps) / 2);
  const double tp2 = tp * tp;
  const double tm2 = tm * tm;

  const double sin_alpha1 = (tp2 + tm2) / 2;
  const double cos2_alpha1 = (1.0 - sin_alpha1) * (1.0 + sin_alpha1);
  // tan^2 alpha' - sec^2 alpha' tp2 tm2 with sin^2 alpha' - tp2 tm2 = ((tp2 - tm2)/2)^2.
  const double half_gap = (tp2 - tm2) / 2;
  const double tan2_eps1 = half_gap * half_gap / cos2_alpha1;

  return ModuliPair{sin_alpha1 * sin_alpha1, tan2_eps1 / (1.0 + tan2_eps1)};
}

Triple step(const Triple& t) { return advance(t).next; }

IterationStep describe_step(std::size_t index, const Triple& t) {
  const RatioPair r = ratios(t);
  return IterationStep{index, t, moduli_from_ratios(r), next_moduli(r)};
}

MeanResult extended_mean(const Triple& t, double tol) {
  validate_triple(t.a, t.b, t.c);
  if (!(tol >= kDefaultTol)) {
    throw Error(ErrorKind::DomainError, "tolerance must be at least 4 machine epsilon");
  }

  MeanResult result;
  result.trace.reserve(16);
  Triple state = t;
  for (int n = 0;; ++n) {
    const Advance adv = advance(state);
    result.trace.push_back(IterationStep{static_cast<std::size_t>(n), state, adv.moduli,
                                         adv.next_moduli});
    if (is_converged(state, tol)) {
      result.mean = (state.a + state.b) / 2;
      result.iterations = n;
      result.converged = true;
      return result;
    }
    if (n == kMaxIterations) {
      throw NonConvergenceError(
          "three-variable iteration did not converge in " + std::to_string(kMaxIterations) +
              " iterations",
          std::move(result.trace));
    }
    state = adv.next;
  }
}

}  // namespace xagm

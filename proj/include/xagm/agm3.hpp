#pragma once

#include <cstddef>
#include <vector>

#include "xagm/agm.hpp"
#include "xagm/core.hpp"
#include "xagm/error.hpp"

namespace xagm {

/// One row of the three-variable iteration: the state (a_n, b_n, c_n), its
/// moduli (kappa_n, lambda_n) and the moduli (kappa_{n+1}, lambda_{n+1}) of
/// the next state.
struct IterationStep {
  std::size_t index = 0;
  Triple triple;
  ModuliPair moduli;
  ModuliPair next_moduli;
};

struct MeanResult {
  double mean = 0.0;
  /// Number of updates applied; trace holds iterations + 1 rows, the last
  /// one being the converged state.
  int iterations = 0;
  std::vector<IterationStep> trace;
  bool converged = false;
};

/// Thrown by extended_mean when the iteration cap is reached.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<IterationStep> trace)
      : Error(ErrorKind::NonConvergence, what), trace_(std::move(trace)) {}

  const std::vector<IterationStep>& trace() const noexcept { return trace_; }

 private:
  std::vector<IterationStep> trace_;
};

/// kappa, lambda = (1 - xi eta +/- sqrt((1 - xi^2)(1 - eta^2))) / 2.
/// The + root always goes to kappa.
ModuliPair moduli_from_triple(const Triple& t);

/// Closed-form moduli of the next state:
///   kappa' = ((1 - xi eta) / ((1 + xi)(1 + eta)))^2
///   lambda' = (xi - eta)^2 / (2 (1 + xi)(1 + eta)(xi + eta))
/// Throws Error{DomainError} if xi + eta == 0.
ModuliPair next_moduli(const RatioPair& r);

/// Same update expressed through the angles kappa = sin^2 alpha,
/// lambda = sin^2 eps:
///   sin alpha' = (tan^2((alpha + eps)/2) + tan^2((alpha - eps)/2)) / 2
///   tan^2 eps' = tan^2 alpha' - sec^2 alpha' tan^2((alpha + eps)/2) tan^2((alpha - eps)/2)
/// Slower and less well conditioned than next_moduli; kept as an
/// independent check of it.
ModuliPair next_moduli_via_angles(const ModuliPair& m);

/// One update (a, b, c) -> (a', b', c'):
///   a' = a (sqrt(1 - lambda) + sqrt(1 - kappa)) / (2 sqrt(1 - lambda'))
///   b' = a' sqrt((1 - kappa')(1 - lambda'))
///   c' = a' sqrt(kappa' lambda')
/// With c == 0 this is a plain Gauss AGM step.
Triple step(const Triple& t);

/// Iterates step() until |a - b| <= tol a and c <= tol a, then reports
/// (a + b)/2.  Throws Error{DomainError} for tol < 4 eps and
/// NonConvergenceError after kMaxIterations updates.
MeanResult extended_mean(const Triple& t, double tol = kDefaultTol);

/// Builds the trace row for state t (no convergence test).
IterationStep describe_step(std::size_t index, const Triple& t);

}  // namespace xagm

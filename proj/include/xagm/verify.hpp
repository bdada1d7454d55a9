#pragma once

#include <map>
#include <string>
#include <vector>

#include "xagm/agm.hpp"
#include "xagm/core.hpp"

namespace xagm {

/// Largest pairwise relative residual accepted by verify_chain.
inline constexpr double kVerifyThreshold = 1e-9;

/// Independent evaluations of a0 / M(a0, b0, c0) and their pairwise
/// relative residuals |x - y| / max(|x|, |y|).
///
/// Routes: "iteration", "u_form", "theta_form", "appell_series",
/// "reduced_2f1".  Residual keys join two route names with "_vs_".
/// The Appell series route is skipped (and listed in `skipped`) when kappa0
/// lies outside the direct double-series domain.
struct VerifyReport {
  ModuliPair moduli;
  double mean = 0.0;
  int iterations = 0;
  std::map<std::string, double> routes;
  std::map<std::string, double> residuals;
  std::vector<std::string> skipped;

  /// Residual keys above the threshold, in key order.
  std::vector<std::string> failures(double threshold = kVerifyThreshold) const;
};

/// Throws whatever validate_triple / extended_mean / the quadratures throw.
VerifyReport verify_chain(const Triple& t, double tol = kDefaultTol);

}  // namespace xagm

#include "xagm/verify.hpp"

#include <algorithm>
#include <cmath>

#include "xagm/agm3.hpp"
#include "xagm/error.hpp"
#include "xagm/hypergeom.hpp"
#include "xagm/quadrature.hpp"

namespace xagm {

namespace {

double relative_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

std::vector<std::string> VerifyReport::failures(double threshold) const {
  std::vector<std::string> out;
  for (const auto& [name, r] : residuals) {
    if (!(r <= threshold)) out.push_back(name);
  }
  return out;
}

VerifyReport verify_chain(const Triple& t, double tol) {
  const Triple v = validate_triple(t.a, t.b, t.c);
  const MeanResult mr = extended_mean(v, tol);

  VerifyReport report;
  report.moduli = moduli_from_triple(v);
  report.mean = mr.mean;
  report.iterations = mr.iterations;

  constexpr AppellF1Params kHalf{0.5, 0.5, 0.5, 1.0};
  const ModuliPair& m = report.moduli;

  // Routes are listed in chain order; the map sorts them by name.
  std::vector<std::pair<std::string, double>> routes;
  routes.emplace_back("iteration", v.a / mr.mean);
  routes.emplace_back("theta_form", integral_theta_form(v));
  routes.emplace_back("u_form", integral_u_form(m));
  if (std::max(m.kappa, m.lambda) < kAppellSeriesLimit) {
    routes.emplace_back("appell_series", appell_f1(kHalf, m.kappa, m.lambda));
  } else {
    report.skipped.emplace_back("appell_series");
  }
  routes.emplace_back("reduced_2f1", f1_reduce(kHalf, m.kappa, m.lambda));

  for (std::size_t i = 0; i < routes.size(); ++i) {
    report.routes[routes[i].first] = routes[i].second;
    for (std::size_t j = i + 1; j < routes.size(); ++j) {
      report.residuals[routes[i].first + "_vs_" + routes[j].first] =
          relative_gap(routes[i].second, routes[j].second);
    }
  }
  return report;
}

}  // namespace xagm

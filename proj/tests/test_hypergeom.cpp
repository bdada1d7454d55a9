#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "xagm/agm.hpp"
#include "xagm/agm3.hpp"
#include "xagm/error.hpp"
#include "xagm/hypergeom.hpp"

using namespace xagm;

namespace {

constexpr AppellF1Params kHalf{0.5, 0.5, 0.5, 1.0};
constexpr Gauss2F1Params kHalf2F1{0.5, 0.5, 1.0};

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::DomainError;
}

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(-2.0, 0) == 1.0);
  CHECK(pochhammer(0.5, 3) == 15.0 / 8.0);
  CHECK(pochhammer(2.0, 4) == 120.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(std::isinf(pochhammer(10.0, 400)));
}

TEST_CASE("gauss_2f1") {
  CHECK(gauss_2f1(kHalf2F1, 0.0) == 1.0);

  const double k = std::sqrt(0.5);
  CHECK(oracle::rel_diff(gauss_2f1(kHalf2F1, 0.5), 2.0 / std::numbers::pi * elliptic_k({k})) < 1e-12);
  CHECK(oracle::rel_diff(gauss_2f1(kHalf2F1, 0.75), 1.0 / agm_mean(1.0, 0.5)) < 1e-11);
  CHECK(gauss_2f1(kHalf2F1, 0.75) == doctest::Approx(1.372880500618350).epsilon(1e-14));

  for (int i = 1; i <= 9; ++i) {
    const double kk = 0.1 * i;
    CHECK(oracle::rel_diff(2.0 / std::numbers::pi * elliptic_k({kk}), gauss_2f1(kHalf2F1, kk * kk)) <
          1e-12);
  }

  // Terminating series: 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1) z^2 / (c(c+1)).
  const double b = 1.5, c = 2.5, z = -0.7;
  CHECK(gauss_2f1({-2.0, b, c}, z) ==
        doctest::Approx(1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1))).epsilon(1e-15));

  // Elementary closed form: 2F1(1, 1; 2; z) = -log(1 - z) / z.
  for (double zz : {-0.9, -0.3, 0.2, 0.6, 0.95}) {
    CHECK(oracle::rel_diff(gauss_2f1({1.0, 1.0, 2.0}, zz), -std::log1p(-zz) / zz) < 1e-13);
  }
  // Near the edge of the accepted domain the series still converges.
  CHECK(oracle::rel_diff(gauss_2f1({1.0, 1.0, 2.0}, 0.998), -std::log1p(-0.998) / 0.998) < 1e-12);
}

TEST_CASE("gauss_2f1 errors") {
  CHECK(kind_of([] { gauss_2f1(kHalf2F1, 0.999); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { gauss_2f1(kHalf2F1, -1.2); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { gauss_2f1({0.5, 0.5, -2.0}, 0.1); }) == ErrorKind::ParamError);
  CHECK(kind_of([] { gauss_2f1({0.5, 0.5, 0.0}, 0.1); }) == ErrorKind::ParamError);
  CHECK(kind_of([] { gauss_2f1(kHalf2F1, 0.9, SeriesBudget{1e-15, 10}); }) ==
        ErrorKind::SlowConvergence);
  CHECK(kind_of([] { gauss_2f1(kHalf2F1, 0.9, SeriesBudget{1e-20, 10}); }) ==
        ErrorKind::ParamError);
}

TEST_CASE("appell_f1 basic values") {
  CHECK(appell_f1(kHalf, 0.0, 0.0) == 1.0);
  CHECK(appell_f1({0.3, -1.7, 2.2, 3.1}, 0.0, 0.0) == 1.0);
  CHECK(appell_f1(kHalf, 0.19, 0.19) == doctest::Approx(10.0 / 9.0).epsilon(1e-14));

  for (int i = 1; i <= 9; ++i) {
    const double x = 0.1 * i;
    if (x >= kAppellSeriesLimit) continue;
    CHECK(std::abs(appell_f1(kHalf, x, x) * std::sqrt(1 - x) - 1.0) < 1e-10);
  }

  // F1 on the moduli of (1, 1/2, 1/5) equals a0 / M.
  const ModuliPair m = moduli_from_triple(Triple{1.0, 0.5, 0.2});
  CHECK(oracle::rel_diff(appell_f1(kHalf, m.kappa, m.lambda), 1.0 / 0.7250921711406717) < 1e-9);
  CHECK(appell_f1(kHalf, m.kappa, m.lambda) == doctest::Approx(1.3791350117969964).epsilon(1e-14));
}

TEST_CASE("appell_f1 matches its Euler integral") {
  const struct {
    AppellF1Params p;
    double x, y;
  } cases[] = {
      {{0.3, 0.4, 0.6, 1.0}, 0.5, 0.2},
      {{1.2, 0.7, 0.9, 1.6}, -0.4, 0.7},
      {{0.5, 1.5, -0.5, 2.0}, 0.8, -0.3},
      {{0.5, 0.5, 0.5, 1.0}, 0.9, 0.05},
  };
  for (const auto& cs : cases) {
    const double expected = oracle::appell_f1_euler(cs.p.alpha, cs.p.beta, cs.p.beta_prime,
                                                    cs.p.gamma, cs.x, cs.y);
    CHECK(oracle::rel_diff(appell_f1(cs.p, cs.x, cs.y), expected) < 1e-12);
  }
  // Frozen: F1(0.3; 0.4, 0.6; 1; 0.5, 0.2) = 1.12814663023930736...
  CHECK(appell_f1({0.3, 0.4, 0.6, 1.0}, 0.5, 0.2) ==
        doctest::Approx(1.1281466302393074).epsilon(1e-14));
}

TEST_CASE("appell_f1 is exactly symmetric under (beta, x) <-> (beta', y)") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> par(-1.5, 2.5);
  std::uniform_real_distribution<double> arg(-0.9, 0.9);
  for (int i = 0; i < 200; ++i) {
    const AppellF1Params p{par(rng), par(rng), par(rng), 0.5 + std::abs(par(rng))};
    const double x = arg(rng), y = arg(rng);
    const double f = appell_f1(p, x, y);
    const double g = appell_f1({p.alpha, p.beta_prime, p.beta, p.gamma}, y, x);
    CHECK(oracle::ulp_distance(f, g) <= 2);
  }
}

TEST_CASE("appell_f1 errors") {
  CHECK(kind_of([] { appell_f1(kHalf, 0.95, 0.1); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { appell_f1(kHalf, 0.1, -0.97); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { appell_f1({0.5, 0.5, 0.5, -1.0}, 0.1, 0.1); }) == ErrorKind::ParamError);
  CHECK(kind_of([] { appell_f1(kHalf, 0.9, 0.9, SeriesBudget{1e-15, 20}); }) ==
        ErrorKind::SlowConvergence);
}

TEST_CASE("f1_reduce") {
  for (double x : {0.0, 0.19, 0.5, 0.97}) {
    CHECK(f1_reduce(kHalf, x, x) == doctest::Approx(1.0 / std::sqrt(1.0 - x)).epsilon(1e-15));
  }
  const ModuliPair m = moduli_from_triple(Triple{1.0, 0.5, 0.2});
  const double reduced = f1_reduce(kHalf, m.kappa, m.lambda);
  const double direct = 1.0 / std::sqrt(1 - m.lambda) *
                        gauss_2f1(kHalf2F1, (m.kappa - m.lambda) / (1 - m.lambda));
  CHECK(oracle::ulp_distance(reduced, direct) <= 2);
  CHECK(oracle::rel_diff(reduced, appell_f1(kHalf, m.kappa, m.lambda)) < 1e-10);

  const AppellF1Params general{0.3, 0.4, 0.6, 1.0};
  CHECK(oracle::rel_diff(f1_reduce(general, 0.5, 0.2), appell_f1(general, 0.5, 0.2)) < 1e-10);
  // Mirror branch x < y.
  CHECK(oracle::rel_diff(f1_reduce(general, 0.2, 0.5), appell_f1(general, 0.2, 0.5)) < 1e-10);
  // y = 0 collapses to a single 2F1.
  CHECK(f1_reduce(general, 0.4, 0.0) == gauss_2f1({0.3, 0.4, 1.0}, 0.4));

  CHECK(kind_of([] { f1_reduce({0.3, 0.4, 0.5, 1.0}, 0.5, 0.2); }) == ErrorKind::ParamError);
  CHECK(kind_of([] { f1_reduce(kHalf, -0.1, 0.2); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { f1_reduce(kHalf, 0.5, 1.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { f1_reduce(kHalf, 0.9995, 0.0); }) == ErrorKind::DomainError);
}

TEST_CASE("f1_pde_residual") {
  const PdeResidual a = f1_pde_residual(kHalf, 0.3, 0.1, 1e-4);
  CHECK(std::abs(a.r1) <= 1e-4);
  CHECK(std::abs(a.r2) <= 1e-4);

  CHECK(appell_f1(kHalf, 0.5, 0.5) == doctest::Approx(1.0 / std::sqrt(0.5)).epsilon(1e-14));
  const PdeResidual b = f1_pde_residual(kHalf, 0.5, 0.5, 1e-4);
  CHECK(std::abs(b.r1) <= 1e-4);
  CHECK(std::abs(b.r2) <= 1e-4);

  const PdeResidual c = f1_pde_residual({0.3, 0.4, 0.6, 1.0}, 0.4, 0.2, 1e-4);
  CHECK(std::abs(c.r1) <= 1e-4);
  CHECK(std::abs(c.r2) <= 1e-4);

  CHECK(kind_of([] { f1_pde_residual(kHalf, 0.3, 0.1, 1e-2); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { f1_pde_residual(kHalf, 0.9499, 0.1, 1e-4); }) == ErrorKind::DomainError);
}

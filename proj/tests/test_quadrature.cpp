#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/quadrature.hpp"
#include "oracles.hpp"

using namespace ellint;
using namespace ellint::quadrature;
using oracles::rel;

namespace {

// Restores ELLINT_MAX_EVALS on scope exit.
struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (const char* old = std::getenv("ELLINT_MAX_EVALS")) saved = old, had = true;
    if (value) {
      setenv("ELLINT_MAX_EVALS", value, 1);
    } else {
      unsetenv("ELLINT_MAX_EVALS");
    }
  }
  ~EnvGuard() {
    if (had) {
      setenv("ELLINT_MAX_EVALS", saved.c_str(), 1);
    } else {
      unsetenv("ELLINT_MAX_EVALS");
    }
  }
  std::string saved;
  bool had = false;
};

}  // namespace

TEST_SUITE("quadrature_oracle") {

TEST_CASE("smooth integrals") {
  CHECK(rel(integrate([](double x) { return std::sin(x); }, 0.0, oracles::pi, 1e-14).value, 2.0) <
        1e-14);
  CHECK(rel(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14).value,
            std::exp(1.0) - 1.0) < 1e-14);
  CHECK(rel(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 10.0, 1e-14).value,
            std::atan(10.0)) < 1e-14);
  // Both the 7-point Gauss and 15-point Kronrod rules are exact for degree 12,
  // so the error estimate vanishes on the first panel.
  const QuadratureResult r = integrate([](double x) { return std::pow(x, 12); }, 0.0, 1.0, 1e-12);
  CHECK(rel(r.value, 1.0 / 13.0) < 1e-15);
  CHECK(r.evaluations == 15);
}

TEST_CASE("peaked integrand needs subdivision") {
  auto f = [](double x) { return 1e-4 / (1e-8 + (x - 0.3) * (x - 0.3)); };
  const double want = std::atan(0.7 / 1e-4) + std::atan(0.3 / 1e-4);
  const QuadratureResult r = integrate(f, 0.0, 1.0, 1e-12);
  CHECK(rel(r.value, want) < 1e-12);
  CHECK(r.evaluations > 15);
  CHECK(r.error_estimate <= 1e-12 * r.value);
}

TEST_CASE("inverse square root at the upper endpoint") {
  CHECK(rel(integrate_singular_upper([](double) { return 1.0; }, 1.0, 1e-14).value,
            oracles::half_pi) < 1e-15);
  CHECK(rel(integrate_singular_upper([](double u) { return u * u; }, 2.0, 1e-14).value,
            oracles::pi) < 1e-14);
  CHECK(rel(integrate_kind([](double) { return 1.0; }, 0.0, 3.0, SingularityKind::inverse_sqrt_upper,
                           1e-14).value,
            oracles::half_pi) < 1e-15);
}

TEST_CASE("inverse square roots at both endpoints") {
  // int q dq / sqrt((b^2 - q^2)(q^2 - a^2)) = pi/2.
  CHECK(rel(integrate_singular_pair([](double q) { return q; }, 0.3, 0.8, 1e-14).value,
            oracles::half_pi) < 1e-14);
  // int dq / sqrt(...) = K(sqrt(1 - a^2/b^2)) / b.
  const double a = 0.3, b = 0.8;
  const double k = std::sqrt(1.0 - a * a / (b * b));
  CHECK(rel(integrate_singular_pair([](double) { return 1.0; }, a, b, 1e-14).value,
            elliptic::complete_k(k) / b) < 1e-13);
}

TEST_CASE("two-dimensional integration") {
  const QuadratureResult r =
      integrate_2d([](double x, double y) { return std::sin(x) * std::exp(y); }, 0.0, oracles::pi,
                   0.0, 1.0, 1e-12);
  CHECK(rel(r.value, 2.0 * (std::exp(1.0) - 1.0)) < 1e-12);
  CHECK(rel(surface_area_quadrature(1.5, 1.5, 1.5, 1e-12).value, 9.0 * oracles::pi) < 1e-12);
  // Frozen mpmath value of the triaxial area at (2, 1.5, 1).
  CHECK(rel(surface_area_quadrature(2.0, 1.5, 1.0, 1e-11).value, 27.88644247350258) < 1e-10);
  CHECK(rel(surface_area_quadrature(1.0, 2.0, 1.5, 1e-11).value, 27.88644247350258) < 1e-10);
}

TEST_CASE("results are bit-reproducible") {
  auto f = [](double x) { return std::log(1.0 + x) * std::cos(7 * x); };
  const QuadratureResult a = integrate(f, 0.0, 3.0, 1e-13);
  const QuadratureResult b = integrate(f, 0.0, 3.0, 1e-13);
  CHECK(a.value == b.value);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("budget exhaustion throws with the best estimate") {
  auto f = [](double x) { return std::sqrt(std::fabs(std::sin(50 * x))); };
  try {
    integrate(f, 0.0, 10.0, 1e-14, 45);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(std::isfinite(e.best()));
    CHECK(e.error_estimate() > 0.0);
    CHECK(rel(e.best(), 6.0) < 0.5);
  }
}

TEST_CASE("non-finite samples throw") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-10),
                  NonConvergenceError);
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10),
                  NonConvergenceError);
}

TEST_CASE("argument validation") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(one, 1.0, 0.0, 1e-10), DomainError);
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 1e-10, 10), DomainError);
  CHECK_THROWS_AS(integrate_singular_pair(one, 0.0, 1.0, 1e-10), DomainError);
  CHECK_THROWS_AS(integrate_singular_upper(one, -1.0, 1e-10), DomainError);
  CHECK_THROWS_AS(surface_area_quadrature(1.0, 0.0, 1.0, 1e-8), DomainError);
}

TEST_CASE("environment override of the evaluation budget") {
  {
    EnvGuard g(nullptr);
    CHECK(budget_1d() == default_budget_1d);
    CHECK(budget_2d() == default_budget_2d);
  }
  {
    EnvGuard g("30");
    CHECK(budget_1d() == 30);
    CHECK(budget_2d() == 30);
    auto f = [](double x) { return std::sqrt(std::fabs(std::sin(50 * x))); };
    CHECK_THROWS_AS(integrate(f, 0.0, 10.0, 1e-14), NonConvergenceError);
  }
  {
    EnvGuard g("not-a-number");
    CHECK(budget_1d() == default_budget_1d);
  }
}

}  // TEST_SUITE

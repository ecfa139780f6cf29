#include <doctest.h>

#include <cmath>
#include <random>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/series.hpp"
#include "oracles.hpp"

using namespace ellint;
using namespace ellint::series;
using oracles::pi;
using oracles::rel;

TEST_SUITE("series_engine") {

// Exact rational coefficients at e1 = 3/5, e2 = 3/10 from the binomial-series
// expansions, rounded once to double.
TEST_CASE("coefficients match frozen references") {
  const double a[] = {1.0,
                      0.075,
                      0.0119475,
                      0.0025059375,
                      0.000606152109375,
                      0.00015952246715198864,
                      4.434909477877103e-05,
                      1.2811918906713867e-05};
  const double omega[] = {1.0,
                          0.225,
                          0.0199125,
                          0.0035083125,
                          0.0007793384263392857,
                          0.000194971904296875,
                          5.24125665567294e-05,
                          1.4782983353900615e-05};
  const double theta[] = {0.0,
                          0.225,
                          0.0091125,
                          0.0020503125,
                          0.000502839140625,
                          0.000131822279296875,
                          3.6344025184570314e-05,
                          1.040961356213379e-05};
  const double psi[] = {0.0,
                        0.0,
                        0.0108,
                        0.001458,
                        0.0002764992857142857,
                        6.3149625e-05,
                        1.606854137215909e-05,
                        4.373369791766827e-06};
  const auto ca = a_coefficients(0.6, 0.3, 7).terms;
  const auto co = omega_coefficients(0.6, 0.3, 7).terms;
  const auto ct = theta_terms(0.6, 0.3, 7).terms;
  const auto cp = psi_terms(0.6, 0.3, 7).terms;
  REQUIRE(ca.size() == 8);
  for (int m = 0; m < 8; ++m) {
    CAPTURE(m);
    CHECK(rel(ca[m], a[m]) < 1e-14);
    CHECK(rel(co[m], omega[m]) < 1e-14);
    CHECK(rel(ct[m], theta[m]) < 1e-14);
    CHECK(rel(cp[m], psi[m]) < 1e-14);
  }
}

TEST_CASE("low-order closed forms") {
  std::mt19937_64 g(41);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const double e1 = u(g), e2 = e1 * u(g);
    const double x = e1 * e1, y = e2 * e2, d = (e1 - e2) * (e1 + e2);
    const auto o = omega_coefficients(e1, e2, 3).terms;
    const auto t = theta_terms(e1, e2, 3).terms;
    const auto p = psi_terms(e1, e2, 3).terms;
    CHECK(rel(o[2], (3 * x * x + 2 * x * y + 3 * y * y) / 24) < 1e-14);
    CHECK(rel(o[3], (5 * x * x * x + 3 * x * x * y + 3 * x * y * y + 5 * y * y * y) / 80) < 1e-14);
    CHECK(rel(t[1], (x + y) / 2) < 1e-15);
    CHECK(rel(t[2], d * d / 8) < 1e-14);
    CHECK(rel(t[3], (x + y) * d * d / 16) < 1e-14);
    CHECK(rel(p[2], x * y / 3) < 1e-14);
    CHECK(rel(p[3], (x * x * y + x * y * y) / 10) < 1e-14);
  }
}

TEST_CASE("omega splits into theta and psi") {
  std::mt19937_64 g(42);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const double e1 = u(g), e2 = e1 * u(g);
    const auto o = omega_coefficients(e1, e2, 30).terms;
    const auto t = theta_terms(e1, e2, 30).terms;
    const auto p = psi_terms(e1, e2, 30).terms;
    for (int m = 1; m <= 30; ++m) {
      CAPTURE(m);
      CHECK(rel(t[m] + p[m], o[m]) < 1e-13);
    }
  }
}

TEST_CASE("coefficients are positive and ratios tend to e1 squared") {
  for (double e1 : {0.5, 0.9}) {
    for (double r : {0.1, 0.5, 0.95}) {
      const double e2 = e1 * r;
      const auto a = a_coefficients(e1, e2, 201).terms;
      const auto o = omega_coefficients(e1, e2, 201).terms;
      const auto t = theta_terms(e1, e2, 50).terms;
      const auto p = psi_terms(e1, e2, 50).terms;
      for (int m = 0; m <= 201; ++m) {
        CHECK(a[m] > 0.0);
        CHECK(o[m] > 0.0);
      }
      for (int m = 1; m <= 50; ++m) CHECK(t[m] > 0.0);
      for (int m = 2; m <= 50; ++m) CHECK(p[m] > 0.0);
      CHECK(rel(a[201] / a[200], e1 * e1) < 0.1);
      CHECK(rel(o[201] / o[200], e1 * e1) < 0.1);
    }
  }
}

TEST_CASE("series sums match frozen references") {
  const SeriesSum s1 = sigma1_sum(0.6, 0.3, 1e-16);
  const SeriesSum s2 = sigma2_sum(0.6, 0.3, 1e-16);
  CHECK(rel(s1.value, 3.4252211653964144) < 1e-15);
  CHECK(rel(s2.value, 0.7837284102321441) < 1e-14);
  CHECK(rel(sigma1_reference(0.6, 0.3), 3.4252211653964144) < 1e-15);
  CHECK(rel(sigma2_reference(0.6, 0.3), 0.7837284102321441) < 1e-15);
  CHECK(s1.terms_used > 10);
  CHECK(s1.truncation_estimate > 0.0);
  CHECK(s1.truncation_estimate < 1e-15);
}

TEST_CASE("sums converge to their references") {
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double e1 = 0.05 + 0.85 * i / 9.0, e2 = e1 * (0.05 + 0.9 * j / 9.0);
      CAPTURE(e1);
      CAPTURE(e2);
      CHECK(rel(sigma1_sum(e1, e2, 1e-16).value, sigma1_reference(e1, e2)) < 1e-12);
      CHECK(rel(sigma2_sum(e1, e2, 1e-16).value, sigma2_reference(e1, e2)) < 1e-12);
    }
  }
  // Small-eccentricity limit.
  const SeriesSum s = sigma2_sum(0.01, 0.005, 1e-15);
  CHECK(std::fabs(s.value - sigma2_reference(0.01, 0.005)) < 1e-12);
  CHECK(s.value < 1e-3);
}

TEST_CASE("more terms are needed as e1 approaches one") {
  const auto n1 = sigma1_sum(0.3, 0.1, 1e-15).terms_used;
  const auto n2 = sigma1_sum(0.9, 0.1, 1e-15).terms_used;
  const auto n3 = sigma1_sum(0.99, 0.1, 1e-15).terms_used;
  CHECK(n1 < n2);
  CHECK(n2 < n3);
}

TEST_CASE("term cap raises non-convergence") {
  try {
    sigma1_sum(0.99, 0.5, 1e-15, 5);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(std::isfinite(e.best()));
    CHECK(e.best() > 0.0);
    CHECK(e.error_estimate() > 0.0);
  }
  CHECK_THROWS_AS(sigma2_sum(0.99, 0.5, 1e-15, 5), NonConvergenceError);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(sigma1_sum(0.3, 0.6, 1e-12), DomainError);
  CHECK_THROWS_AS(sigma1_sum(1.0, 0.6, 1e-12), DomainError);
  CHECK_THROWS_AS(sigma2_sum(0.6, 0.0, 1e-12), DomainError);
  CHECK_THROWS_AS(sigma1_sum(0.6, 0.3, 0.0), DomainError);
  CHECK_THROWS_AS(a_coefficients(0.6, 0.3, -1), DomainError);
  CHECK_THROWS_AS(f_maclaurin_derivative(-1, 0.6, 0.3), DomainError);
  CHECK_THROWS_AS(f_maclaurin_derivative(100, 0.6, 0.3), DomainError);
}

TEST_CASE("Maclaurin derivatives") {
  for (double e1 : {0.3, 0.6, 0.9}) {
    for (double r : {0.1, 0.5, 0.9}) {
      const double e2 = e1 * r, k = r;
      for (int m = 0; m <= 6; ++m) {
        CAPTURE(m);
        CHECK(rel(f_maclaurin_derivative(m, e1, e2), oracles::maclaurin_derivative(m, k)) < 1e-13);
      }
      auto f = [k](double z) {
        const double v = elliptic::incomplete_f(std::asin(std::fabs(z)), k);
        return z < 0 ? -v : v;
      };
      for (int m = 0; m <= 2; ++m) {
        CHECK(rel(f_maclaurin_derivative(m, e1, e2), oracles::odd_derivative_fd(f, m, 1e-2)) < 1e-4);
      }
    }
  }
  CHECK(f_maclaurin_derivative(0, 0.6, 0.3) == 1.0);
  CHECK(rel(f_maclaurin_derivative(1, 0.6, 0.3), 1.25) < 1e-15);
}

}  // TEST_SUITE

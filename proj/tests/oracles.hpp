#ifndef ELLINT_TESTS_ORACLES_HPP
#define ELLINT_TESTS_ORACLES_HPP

// Test-only reference computations, written without the library's Carlson
// reduction or Gauss-Kronrod integrator.

#include <cmath>
#include <random>
#include <vector>

namespace oracles {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double half_pi = pi / 2;

inline double rel(double got, double want) {
  return want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}

// Complete K and E from the arithmetic-geometric mean.
struct AgmPair {
  double k;
  double e;
};

inline AgmPair agm_complete(double k) {
  double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k)), c = k;
  double sum = 0.5 * c * c;  // sum_n 2^(n-1) c_n^2
  double pow2 = 0.5;
  for (int i = 0; i < 60 && c != 0.0; ++i) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  const double kk = half_pi / a;
  return {kk, kk * (1.0 - sum)};
}

// Double-exponential (tanh-sinh) quadrature of a smooth integrand on [a, b].
// Levels halve the step until two successive estimates agree to tol.
template <class F>
double tanh_sinh(F f, double a, double b, double tol = 1e-15) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double t_max = 3.5;
  auto node = [&](double t, double& sum) {
    const double u = half_pi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half_pi * std::cosh(t) / (ch * ch);
    // 1 - tanh|u| without cancellation.
    const double rho = 1.0 / (std::exp(std::fabs(u)) * ch);
    const double off = half * rho;
    const double xl = a + off, xr = b - off;
    if (t == 0.0) {
      sum += w * f(mid);
      return;
    }
    if (xl > a && xl < b) sum += w * f(xl);
    if (xr > a && xr < b) sum += w * f(xr);
  };
  double h = 0.5;
  double sum = 0.0;
  for (double t = 0.0; t <= t_max; t += h) node(t, sum);
  double estimate = half * h * sum;
  for (int level = 0; level < 12; ++level) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2 * h) node(t, sum);
    const double next = half * h * sum;
    if (std::fabs(next - estimate) <= tol * std::fabs(next)) return next;
    estimate = next;
  }
  return estimate;
}

// Legendre integrals by direct quadrature of their definitions.
inline double legendre_f(double phi, double k) {
  return tanh_sinh([k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); },
                   0.0, phi);
}

inline double legendre_e(double phi, double k) {
  return tanh_sinh([k](double t) { return std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); },
                   0.0, phi);
}

// (2m)! sum_{i+j=m} c_i c_j k^{2j}, c_i = C(2i, i)/4^i: the (2m+1)-th
// derivative at 0 of z -> F(asin z, k) = int_0^z dw / sqrt((1 - w^2)(1 - k^2 w^2)).
inline double maclaurin_derivative(int m, double k) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  c[0] = 1.0;
  for (int i = 1; i <= m; ++i) c[i] = c[i - 1] * (2.0 * i - 1.0) / (2.0 * i);
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) sum += c[m - j] * c[j] * std::pow(k * k, j);
  for (int j = 2; j <= 2 * m; ++j) sum *= j;
  return sum;
}

// Central finite-difference (2m+1)-th derivative at 0 of an odd function,
// m <= 2, with one Richardson extrapolation step.
template <class F>
double odd_derivative_fd(F f, int m, double h) {
  auto stencil = [&](double s) {
    switch (m) {
      case 0: return (f(s) - f(-s)) / (2 * s);
      case 1: return (f(2 * s) - 2 * f(s) + 2 * f(-s) - f(-2 * s)) / (2 * s * s * s);
      default:
        return (f(3 * s) - 4 * f(2 * s) + 5 * f(s) - 5 * f(-s) + 4 * f(-2 * s) - f(-3 * s)) /
               (2 * std::pow(s, 5));
    }
  };
  return (4 * stencil(h / 2) - stencil(h)) / 3;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracles

#endif  // ELLINT_TESTS_ORACLES_HPP

#ifndef ELLINT_QUADRATURE_HPP
#define ELLINT_QUADRATURE_HPP

#include <cstdint>
#include <functional>

namespace ellint::quadrature {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

// Endpoint kernels removed by a change of variables before integrating.
//   none               f(x) on [lo, hi]
//   inverse_sqrt_upper g(u) / sqrt(hi^2 - u^2) on [0, hi], via u = hi sin t
//   inverse_sqrt_both  g(q) / sqrt((hi^2 - q^2)(q^2 - lo^2)) on [lo, hi],
//                      via q^2 = lo^2 + (hi^2 - lo^2) sin^2 t
enum class SingularityKind { none, inverse_sqrt_upper, inverse_sqrt_both };

using Function = std::function<double(double)>;

inline constexpr std::int64_t default_budget_1d = 1'000'000;
inline constexpr std::int64_t default_budget_2d = 10'000'000;

// Evaluation budget for 1D calls; ELLINT_MAX_EVALS overrides it when set to a
// positive integer.
std::int64_t budget_1d();
std::int64_t budget_2d();

// Globally adaptive 15-point Gauss-Kronrod quadrature with 7-point Gauss error
// estimate. Stops when the summed error is below
// max(tol |value|, 1e-15 (hi - lo)). Throws NonConvergenceError when the
// evaluation budget runs out or the integrand returns a non-finite value.
QuadratureResult integrate(const Function& f, double lo, double hi, double tol);
QuadratureResult integrate(const Function& f, double lo, double hi, double tol,
                           std::int64_t budget);

// g(q) / sqrt((hi^2 - q^2)(q^2 - lo^2)) on [lo, hi], 0 < lo < hi.
QuadratureResult integrate_singular_pair(const Function& g, double lo, double hi, double tol);

// g(u) / sqrt(hi^2 - u^2) on [0, hi], hi > 0.
QuadratureResult integrate_singular_upper(const Function& g, double hi, double tol);

// Dispatch on the kernel annotation.
QuadratureResult integrate_kind(const Function& g, double lo, double hi, SingularityKind kind,
                                double tol);

using Function2 = std::function<double(double, double)>;

// Nested adaptive integration of f(x, y) over [x0, x1] x [y0, y1]. Each inner
// integral is done to 0.1 tol; the reported error adds the worst inner
// relative error to the outer estimate.
QuadratureResult integrate_2d(const Function2& f, double x0, double x1, double y0, double y1,
                              double tol);

// 8 times the double integral over [0, pi/2]^2 of
//   sin t sqrt(b^2 c^2 sin^2 t cos^2 p + a^2 c^2 sin^2 t sin^2 p + a^2 b^2 cos^2 t),
// the ellipsoid surface area for any axis order.
QuadratureResult surface_area_quadrature(double a, double b, double c, double tol);

}  // namespace ellint::quadrature

#endif  // ELLINT_QUADRATURE_HPP

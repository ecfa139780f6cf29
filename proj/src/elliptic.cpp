#include "ellint/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ellint/errors.hpp"

namespace ellint::elliptic {
namespace {

using detail::require;

constexpr double eps = std::numeric_limits<double>::epsilon();

void require_amplitude(double phi, const char* fn) {
  require(phi >= 0.0 && phi <= half_pi, fn, "0 <= phi <= pi/2");
}

void require_modulus(double k, const char* fn) {
  require(k >= 0.0 && k <= 1.0, fn, "0 <= k <= 1");
}

// sin and cos of an amplitude, with cos exactly zero at the double nearest
// pi/2 so that complete values come out of the incomplete formulas.
void sincos_amplitude(double phi, double& s, double& c) {
  if (phi == half_pi) {
    s = 1.0;
    c = 0.0;
  } else {
    s = std::sin(phi);
    c = std::cos(phi);
  }
}

// 1 - k^2 s^2 without forming k^2 when k is close to 1.
double delta_squared(double c, double s, double k) {
  return c * c + (1.0 - k) * (1.0 + k) * s * s;
}

// (x - sin x) / 4, the k -> 0 limit of D(phi, k) with x = 2 phi.
double d_limit(double phi) {
  const double x = 2.0 * phi;
  if (x < 1.0) {
    double term = x * x * x / 6.0;
    double sum = term;
    for (int n = 2; std::fabs(term) > eps * sum; ++n) {
      term *= -x * x / ((2.0 * n) * (2.0 * n + 1.0));
      sum += term;
    }
    return sum / 4.0;
  }
  return (x - std::sin(x)) / 4.0;
}

}  // namespace

double carlson_rf(double x, double y, double z) {
  require(x >= 0.0 && y >= 0.0 && z >= 0.0, "carlson_rf", "x, y, z >= 0");
  require((x == 0.0) + (y == 0.0) + (z == 0.0) <= 1, "carlson_rf",
          "at most one zero argument");
  const double x0 = x, y0 = y;
  const double a0 = (x + y + z) / 3.0;
  double an = a0;
  double q = std::pow(3.0 * eps, -1.0 / 6.0) *
             std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});
  double fac = 1.0;
  while (q >= std::fabs(an)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = (x + lambda) / 4.0;
    y = (y + lambda) / 4.0;
    z = (z + lambda) / 4.0;
    an = (an + lambda) / 4.0;
    q /= 4.0;
    fac /= 4.0;
  }
  const double X = (a0 - x0) * fac / an;
  const double Y = (a0 - y0) * fac / an;
  const double Z = -X - Y;
  const double e2 = X * Y - Z * Z;
  const double e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
         std::sqrt(an);
}

double carlson_rd(double x, double y, double z) {
  require(x >= 0.0 && y >= 0.0 && z > 0.0, "carlson_rd", "x, y >= 0 and z > 0");
  require(x + y > 0.0, "carlson_rd", "x and y not both zero");
  const double x0 = x, y0 = y;
  const double a0 = (x + y + 3.0 * z) / 5.0;
  double an = a0;
  double q = std::pow(eps / 4.0, -1.0 / 6.0) *
             std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});
  double fac = 1.0;
  double sum = 0.0;
  while (q >= std::fabs(an)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    sum += fac / (sz * (z + lambda));
    fac /= 4.0;
    x = (x + lambda) / 4.0;
    y = (y + lambda) / 4.0;
    z = (z + lambda) / 4.0;
    an = (an + lambda) / 4.0;
    q /= 4.0;
  }
  const double X = (a0 - x0) * fac / an;
  const double Y = (a0 - y0) * fac / an;
  const double Z = -(X + Y) / 3.0;
  const double xy = X * Y;
  const double z2 = Z * Z;
  const double e2 = xy - 6.0 * z2;
  const double e3 = (3.0 * xy - 8.0 * z2) * Z;
  const double e4 = 3.0 * (xy - z2) * z2;
  const double e5 = xy * z2 * Z;
  const double poly = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                      3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return fac * poly / (an * std::sqrt(an)) + 3.0 * sum;
}

double incomplete_f(double phi, double k) {
  require_amplitude(phi, "incomplete_f");
  require_modulus(k, "incomplete_f");
  if (k == 0.0) return phi;
  if (k == 1.0) {
    if (phi == half_pi) throw DivergenceError("incomplete_f: diverges at phi = pi/2, k = 1");
    return std::atanh(std::sin(phi));
  }
  if (phi == 0.0) return 0.0;
  double s, c;
  sincos_amplitude(phi, s, c);
  return s * carlson_rf(c * c, delta_squared(c, s, k), 1.0);
}

double incomplete_e(double phi, double k) {
  require_amplitude(phi, "incomplete_e");
  require_modulus(k, "incomplete_e");
  if (k == 0.0) return phi;
  if (phi == 0.0) return 0.0;
  double s, c;
  sincos_amplitude(phi, s, c);
  if (k == 1.0) return s;
  const double c2 = c * c;
  const double d2 = delta_squared(c, s, k);
  return s * carlson_rf(c2, d2, 1.0) - k * k * s * s * s / 3.0 * carlson_rd(c2, d2, 1.0);
}

double incomplete_d(double phi, double k) {
  require_amplitude(phi, "incomplete_d");
  require_modulus(k, "incomplete_d");
  if (phi == 0.0) return 0.0;
  if (k < 1e-6) return d_limit(phi);
  double s, c;
  sincos_amplitude(phi, s, c);
  if (k == 1.0 && c == 0.0) throw DivergenceError("incomplete_d: diverges at phi = pi/2, k = 1");
  return s * s * s / 3.0 * carlson_rd(c * c, delta_squared(c, s, k), 1.0);
}

double complete_k(double k) {
  require_modulus(k, "complete_k");
  if (k == 1.0) throw DivergenceError("complete_k: diverges at k = 1");
  return incomplete_f(half_pi, k);
}

double complete_e(double k) {
  require_modulus(k, "complete_e");
  return incomplete_e(half_pi, k);
}

double complete_d(double k) {
  require_modulus(k, "complete_d");
  return incomplete_d(half_pi, k);
}

double complementary_amplitude(double phi1, double kprime, AdditionBranch branch) {
  require_amplitude(phi1, "complementary_amplitude");
  require(kprime > 0.0 && kprime < 1.0, "complementary_amplitude", "0 < k' < 1");
  double s, c;
  sincos_amplitude(phi1, s, c);
  const double k = std::sqrt((1.0 - kprime) * (1.0 + kprime));
  // cos phi2 = k s / sqrt(1 - k'^2 s^2) and sin phi2 = c / sqrt(1 - k'^2 s^2).
  const double phi2 = std::atan2(c, k * s);
  return branch == AdditionBranch::lower ? phi2 : pi - phi2;
}

double addition_residual(double phi1, double kprime, AdditionBranch branch) {
  const double phi2 = complementary_amplitude(phi1, kprime, branch);
  const double sign = branch == AdditionBranch::lower ? -1.0 : 1.0;
  const double signed_phi2 = branch == AdditionBranch::lower ? -phi2 : phi2;
  const double e_full = complete_e(kprime);
  const double lhs = incomplete_e(phi1, kprime) + sign * e_full;
  const double rhs = incomplete_e_extended(signed_phi2, kprime) +
                     sign * kprime * kprime * std::sin(phi1) * std::sin(signed_phi2);
  return lhs - rhs;
}

double incomplete_e_extended(double phi, double k) {
  require(std::isfinite(phi), "incomplete_e_extended", "finite phi");
  require_modulus(k, "incomplete_e_extended");
  if (phi < 0.0) return -incomplete_e_extended(-phi, k);
  const double n = std::floor(phi / pi + 0.5);
  double r = phi - n * pi;
  double base;
  if (r >= 0.0) {
    base = incomplete_e(std::min(r, half_pi), k);
  } else {
    base = -incomplete_e(std::min(-r, half_pi), k);
  }
  return base + 2.0 * n * complete_e(k);
}

double conjugate_delta(double theta, double k) {
  require(theta > 0.0 && theta < half_pi, "conjugate_delta", "0 < theta < pi/2");
  require(k >= 0.0 && k < 1.0, "conjugate_delta", "0 <= k < 1");
  const double kprime = std::sqrt((1.0 - k) * (1.0 + k));
  return std::atan2(std::cos(theta), kprime * std::sin(theta));
}

ReducedPair imaginary_modulus_reduce(double phi, double k) {
  require_amplitude(phi, "imaginary_modulus_reduce");
  require(k >= 0.0 && std::isfinite(k), "imaginary_modulus_reduce", "finite k >= 0");
  if (k == 0.0) return {phi, phi};
  double s, c;
  sincos_amplitude(phi, s, c);
  const double root = std::sqrt(1.0 + k * k);
  const double k1 = k / root;
  const double k1p = 1.0 / root;
  const double beta = c == 0.0 ? half_pi : std::atan2(root * s, c);
  double sb, cb;
  sincos_amplitude(beta, sb, cb);
  const double f = k1p * incomplete_f(beta, k1);
  const double bracket =
      incomplete_e(beta, k1) - k1 * k1 * sb * cb / std::sqrt(delta_squared(cb, sb, k1));
  return {f, bracket / k1p};
}

ReducedPair imaginary_argument_reduce(double phi_hyp, double k) {
  require(phi_hyp >= 0.0 && std::isfinite(phi_hyp), "imaginary_argument_reduce",
          "finite phi_hyp >= 0");
  require(k > 0.0 && k < 1.0, "imaginary_argument_reduce", "0 < k < 1");
  if (phi_hyp == 0.0) return {0.0, 0.0};
  const double sh = std::sinh(phi_hyp);
  require(std::isfinite(sh), "imaginary_argument_reduce", "sinh(phi_hyp) finite");
  const double delta = std::atan(sh);
  const double kprime = std::sqrt((1.0 - k) * (1.0 + k));
  const double f = incomplete_f(delta, kprime);
  const double e_part = incomplete_e(delta, kprime);
  // tan(delta) sqrt(1 - k'^2 sin^2 delta), rewritten in hyperbolic terms.
  const double tail = sh * std::sqrt(1.0 + k * k * sh * sh) / std::cosh(phi_hyp);
  return {f, f - e_part + tail};
}

}  // namespace ellint::elliptic

#include "ellint/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"

namespace ellint::geometry {
namespace {

using detail::require;
using elliptic::pi;

void require_positive(const SemiAxes& x, const char* fn) {
  require(x.a > 0.0 && x.b > 0.0 && x.c > 0.0 && std::isfinite(x.a) && std::isfinite(x.b) &&
              std::isfinite(x.c),
          fn, "positive finite semi-axes");
}

// sqrt(x^2 - y^2) for x >= y >= 0 without squaring first.
double diff_root(double x, double y) { return std::sqrt((x - y) * (x + y)); }

}  // namespace

std::string_view to_string(ShapeClass s) {
  switch (s) {
    case ShapeClass::sphere: return "sphere";
    case ShapeClass::oblate: return "oblate";
    case ShapeClass::prolate: return "prolate";
    case ShapeClass::triaxial: return "triaxial";
  }
  return "unknown";
}

SemiAxes sorted_descending(const SemiAxes& axes) {
  double v[3] = {axes.a, axes.b, axes.c};
  std::sort(v, v + 3, [](double x, double y) { return x > y; });
  return {v[0], v[1], v[2]};
}

SemiAxes sorted_ascending(const SemiAxes& axes) {
  const SemiAxes d = sorted_descending(axes);
  return {d.c, d.b, d.a};
}

ShapeClass classify(const SemiAxes& axes, double rel_tol) {
  require_positive(axes, "classify");
  require(rel_tol > 0.0 && rel_tol <= 1e-3, "classify", "0 < rel_tol <= 1e-3");
  const SemiAxes s = sorted_descending(axes);
  if ((s.a - s.c) / s.a <= rel_tol) return ShapeClass::sphere;
  if ((s.a - s.b) / s.a <= rel_tol) return ShapeClass::oblate;
  if ((s.b - s.c) / s.b <= rel_tol) return ShapeClass::prolate;
  return ShapeClass::triaxial;
}

EccentricityPair eccentricities(const SemiAxes& axes) {
  require_positive(axes, "eccentricities");
  require(axes.a >= axes.b && axes.b >= axes.c, "eccentricities", "a >= b >= c > 0");
  return {diff_root(axes.a, axes.c) / axes.a, diff_root(axes.b, axes.c) / axes.b};
}

BarredPair barred_params(const SemiAxes& axes) {
  require_positive(axes, "barred_params");
  require(axes.c >= axes.b && axes.b >= axes.a, "barred_params", "c >= b >= a > 0");
  return {diff_root(axes.c, axes.a) / axes.a, diff_root(axes.c, axes.b) / axes.b};
}

AmplitudeModulus amplitude_modulus(const SemiAxes& axes) {
  require_positive(axes, "amplitude_modulus");
  require(axes.a > axes.b && axes.b > axes.c, "amplitude_modulus", "a > b > c > 0");
  const double ac = diff_root(axes.a, axes.c);
  return {std::atan2(ac, axes.c), axes.a * diff_root(axes.b, axes.c) / (axes.b * ac)};
}

AmplitudeModulus barred_amplitude_modulus(const BarredPair& f) {
  require(f.f1bar > f.f2bar && f.f2bar > 0.0 && std::isfinite(f.f1bar),
          "barred_amplitude_modulus", "f1bar > f2bar > 0");
  const double r = f.f2bar / f.f1bar;
  return {std::atan(f.f1bar), std::sqrt((1.0 - r) * (1.0 + r))};
}

double oblate_area(double r, double c) {
  require(r > c && c > 0.0 && std::isfinite(r), "oblate_area", "r > c > 0");
  const double e = diff_root(r, c) / r;
  return 2.0 * pi * r * r + 2.0 * pi * c * c * std::atanh(e) / e;
}

double prolate_area(double r, double c) {
  require(c > r && r > 0.0 && std::isfinite(c), "prolate_area", "c > r > 0");
  const double e = diff_root(c, r) / c;
  return 2.0 * pi * r * r + 2.0 * pi * r * c * std::asin(e) / e;
}

double surface_area(const SemiAxes& axes) {
  require_positive(axes, "surface_area");
  const SemiAxes s = sorted_descending(axes);
  switch (classify(s)) {
    case ShapeClass::sphere: {
      const double r2 = (s.a * s.b + s.b * s.c + s.c * s.a) / 3.0;
      return 4.0 * pi * r2;
    }
    case ShapeClass::oblate: {
      const double r = 0.5 * (s.a + s.b);
      return oblate_area(r, s.c);
    }
    case ShapeClass::prolate: {
      const double r = 0.5 * (s.b + s.c);
      return prolate_area(r, s.a);
    }
    case ShapeClass::triaxial:
      break;
  }
  return surface_area_bowman(s);
}

double surface_area_bowman(const SemiAxes& axes) {
  require_positive(axes, "surface_area_bowman");
  require(axes.a > axes.b && axes.b > axes.c, "surface_area_bowman", "a > b > c > 0");
  const auto [phi, k] = amplitude_modulus(axes);
  const double ac = diff_root(axes.a, axes.c);
  const double c2 = axes.c * axes.c;
  return 2.0 * pi * c2 + 2.0 * pi * axes.b / ac *
                             (ac * ac * elliptic::incomplete_e(phi, k) +
                              c2 * elliptic::incomplete_f(phi, k));
}

double surface_area_ascending(const SemiAxes& axes) {
  require_positive(axes, "surface_area_ascending");
  require(axes.c > axes.b && axes.b > axes.a, "surface_area_ascending", "c > b > a > 0");
  const double ca = diff_root(axes.c, axes.a);
  const double f1 = ca / axes.a;
  const double phi = std::atan2(ca, axes.a);
  const double k = axes.c * diff_root(axes.b, axes.a) / (axes.b * ca);
  return 2.0 * pi * axes.a * axes.a *
         (1.0 + axes.b / axes.a *
                    (elliptic::incomplete_f(phi, k) / f1 + f1 * elliptic::incomplete_e(phi, k)));
}

double surface_area_legendre(const SemiAxes& axes) {
  require_positive(axes, "surface_area_legendre");
  require(axes.a > axes.b && axes.b > axes.c, "surface_area_legendre", "a > b > c > 0");
  const double a2 = axes.a * axes.a;
  const double c2 = axes.c * axes.c;
  const double ac = diff_root(axes.a, axes.c);
  const double nu = std::atan2(ac, axes.c);  // cos nu = c/a
  const double sin_nu = ac / axes.a;
  const double bprime = diff_root(axes.b, axes.c) / (axes.b * sin_nu);
  return 2.0 * pi * c2 + 2.0 * pi * axes.a * axes.b / sin_nu *
                             (c2 / a2 * elliptic::incomplete_f(nu, bprime) +
                              ac * ac / a2 * elliptic::incomplete_e(nu, bprime));
}

double surface_area_eccentric(double c, const EccentricityPair& e) {
  require(c > 0.0 && std::isfinite(c), "surface_area_eccentric", "c > 0");
  require(1.0 > e.e1 && e.e1 > e.e2 && e.e2 > 0.0, "surface_area_eccentric", "1 > e1 > e2 > 0");
  const double phi = std::asin(e.e1);
  const double k = e.e2 / e.e1;
  const double w1 = (1.0 - e.e1) * (1.0 + e.e1);
  const double w2 = (1.0 - e.e2) * (1.0 + e.e2);
  const double bracket =
      (e.e1 * e.e1 * elliptic::incomplete_e(phi, k) + w1 * elliptic::incomplete_f(phi, k)) /
      (e.e1 * w1);
  return 2.0 * pi * c * c * (1.0 + std::sqrt(w1 / w2) * bracket);
}

double surface_area_rotated_eccentric(double a, double e1bar, double e2bar) {
  require(a > 0.0 && std::isfinite(a), "surface_area_rotated_eccentric", "a > 0");
  require(1.0 > e1bar && e1bar > e2bar && e2bar > 0.0, "surface_area_rotated_eccentric",
          "1 > e1bar > e2bar > 0");
  const double w1 = (1.0 - e1bar) * (1.0 + e1bar);
  const double w2 = (1.0 - e2bar) * (1.0 + e2bar);
  const double phi = std::asin(e1bar);
  const double k = std::sqrt((e1bar - e2bar) * (e1bar + e2bar) / (e1bar * e1bar * w2));
  const double root1 = std::sqrt(w1);
  return 2.0 * pi * a * a *
         (1.0 + std::sqrt(w2 / w1) * (root1 * elliptic::incomplete_f(phi, k) / e1bar +
                                      e1bar * elliptic::incomplete_e(phi, k) / root1));
}

double surface_area_barred(double a, const BarredPair& f) {
  require(a > 0.0 && std::isfinite(a), "surface_area_barred", "a > 0");
  const auto [phi, k] = barred_amplitude_modulus(f);
  const double ratio = std::sqrt((1.0 + f.f1bar * f.f1bar) / (1.0 + f.f2bar * f.f2bar));
  return 2.0 * pi * a * a *
         (1.0 + ratio * (elliptic::incomplete_f(phi, k) / f.f1bar +
                         f.f1bar * elliptic::incomplete_e(phi, k)));
}

}  // namespace ellint::geometry

#ifndef ELLINT_GEOMETRY_HPP
#define ELLINT_GEOMETRY_HPP

#include <string_view>

namespace ellint::geometry {

struct SemiAxes {
  double a;
  double b;
  double c;
};

enum class ShapeClass { sphere, oblate, prolate, triaxial };

std::string_view to_string(ShapeClass s);

// Descending order a >= b >= c: e1^2 = (a^2 - c^2)/a^2, e2^2 = (b^2 - c^2)/b^2.
struct EccentricityPair {
  double e1;
  double e2;
};

// Ascending order c >= b >= a: f1^2 = (c^2 - a^2)/a^2, f2^2 = (c^2 - b^2)/b^2.
struct BarredPair {
  double f1bar;
  double f2bar;
};

struct AmplitudeModulus {
  double phi;
  double k;
};

inline constexpr double default_rel_tol = 1e-9;

// Sort descending p >= q >= r, then: sphere if (p - r)/p <= rel_tol, oblate if
// (p - q)/p <= rel_tol, prolate if (q - r)/q <= rel_tol, otherwise triaxial.
ShapeClass classify(const SemiAxes& axes, double rel_tol = default_rel_tol);

SemiAxes sorted_descending(const SemiAxes& axes);
SemiAxes sorted_ascending(const SemiAxes& axes);

EccentricityPair eccentricities(const SemiAxes& axes);
BarredPair barred_params(const SemiAxes& axes);

// (phi, k) with sin phi = e1 and k = e2/e1, from descending axes a > b > c.
AmplitudeModulus amplitude_modulus(const SemiAxes& axes);
// (phi_bar, k_bar) = (atan f1, sqrt(1 - f2^2/f1^2)).
AmplitudeModulus barred_amplitude_modulus(const BarredPair& f);

// Any order, any degeneracy: sphere 4 pi r^2, closed spheroid forms for
// oblate and prolate, and the Bowman form on the descending sort otherwise.
double surface_area(const SemiAxes& axes);

// Closed spheroid forms. Oblate (r, r, c) requires r > c; prolate (c, r, r)
// requires c > r.
double oblate_area(double r, double c);
double prolate_area(double r, double c);

// Bowman form; strict a > b > c > 0.
double surface_area_bowman(const SemiAxes& axes);
// Barred form on ascending axes; strict c > b > a > 0.
double surface_area_ascending(const SemiAxes& axes);
// Legendre's form with cos nu = c/a; strict a > b > c > 0.
double surface_area_legendre(const SemiAxes& axes);

// Shape-parameter forms: smallest axis c with (e1, e2); smallest axis a with
// ascending eccentricities (e1bar, e2bar); smallest axis a with (f1bar, f2bar).
double surface_area_eccentric(double c, const EccentricityPair& e);
double surface_area_rotated_eccentric(double a, double e1bar, double e2bar);
double surface_area_barred(double a, const BarredPair& f);

}  // namespace ellint::geometry

#endif  // ELLINT_GEOMETRY_HPP

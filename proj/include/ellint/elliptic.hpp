#ifndef ELLINT_ELLIPTIC_HPP
#define ELLINT_ELLIPTIC_HPP

// Legendre-form elliptic integrals of the first, second and D kind, plus the
// amplitude/modulus transformations used by the extension identities.
//
// Conventions: amplitude phi in [0, pi/2], modulus k in [0, 1] (not the
// parameter m = k^2). Everything is evaluated through Carlson's symmetric
// integrals R_F and R_D.

namespace ellint::elliptic {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double half_pi = pi / 2;

// Carlson symmetric integrals. rf requires x, y, z >= 0 with at most one zero;
// rd requires x, y >= 0 (not both zero) and z > 0.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

double incomplete_f(double phi, double k);
double incomplete_e(double phi, double k);
// (F - E) / k^2. For k below 1e-6 the k -> 0 limit (phi - sin phi cos phi)/2
// is returned.
double incomplete_d(double phi, double k);

double complete_k(double k);
double complete_e(double k);
double complete_d(double k);

// Sign branch of the two-sided addition formula
//   E(phi1, k') +- E(k') = E(phi2, k') +- k'^2 sin phi1 sin phi2.
// `lower` returns phi2 in [0, pi/2] with
//   cos phi2 = sin phi1 sqrt((1 - k'^2 sin^2 phi1)(1 - k'^2)) / (1 - k'^2 sin^2 phi1)
// `upper` returns pi - phi2 (cos phi2 negated). For the lower sign the
// identity holds with the signed amplitude -phi2; for the upper sign it holds
// with pi - phi2, i.e. E(phi1) + E(phi2) = E(k') + k'^2 sin phi1 sin phi2 for
// the principal phi2.
enum class AdditionBranch { lower, upper };

double complementary_amplitude(double phi1, double kprime,
                               AdditionBranch branch = AdditionBranch::lower);

// Left minus right side of the addition formula for the given branch,
// evaluated with the amplitude returned by complementary_amplitude.
double addition_residual(double phi1, double kprime, AdditionBranch branch);

// E(phi, k) for any real phi, using E(phi + n pi) = E(phi) + 2n E(k) and
// oddness in phi.
double incomplete_e_extended(double phi, double k);

// delta in (0, pi/2) with cot delta = k' tan theta, so that
// F(theta, k) + F(delta, k) = K(k).
double conjugate_delta(double theta, double k);

struct ReducedPair {
  double f_value;
  double e_value;
};

// int_0^phi (1 + k^2 sin^2 t)^(-1/2) dt and int_0^phi (1 + k^2 sin^2 t)^(1/2) dt
// for any k >= 0, reduced to a real modulus k1 = k / sqrt(1 + k^2).
ReducedPair imaginary_modulus_reduce(double phi, double k);

// int_0^x (1 + k^2 sinh^2 t)^(-1/2) dt and int_0^x (1 + k^2 sinh^2 t)^(1/2) dt
// for x = phi_hyp >= 0, k in (0, 1), reduced to amplitude atan(sinh x) and
// modulus k'.
ReducedPair imaginary_argument_reduce(double phi_hyp, double k);

}  // namespace ellint::elliptic

#endif  // ELLINT_ELLIPTIC_HPP

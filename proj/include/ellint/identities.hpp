#ifndef ELLINT_IDENTITIES_HPP
#define ELLINT_IDENTITIES_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ellint/geometry.hpp"
#include "ellint/quadrature.hpp"

namespace ellint::identities {

enum class IdentityId {
  I1,
  I1_BARRED,
  PR3_D,
  PR3_D_BARRED,
  LOG_F,
  LOG_Q2,
  PSEUDO,
  I3,
  I4,
  I5,
  I6,
  I2_BARRED,
  I3_BARRED,
  GR_E_SIN,
  GR_F_SIN,
  ATAN_F,
  ATAN_E,
};

inline constexpr int identity_count = 17;

// Parameter records. Domains:
//   AlphaK     1 > k > 0, 1 > alpha > 0
//   AlphaKBar  1 > kbar > alphabar > 0
//   AlphaZ     alpha > 0, z > 0
//   EpsAB      eps > beta > alpha > 0
//   NuK        1 > k > tanh(nu) > 0
//   MuK        1 > k > 0, mu > 0
//   PsiKBar    1 > kbar > 0, pi/2 > psi > 0
//   XiKBar     1 > kbar > 0, pi/2 > xi > 0
//   E1E2       1 > e1 > e2 > 0
//   FBar       inf > f1bar > f2bar > 0
struct AlphaK { double alpha, k; };
struct AlphaKBar { double alphabar, kbar; };
struct AlphaZ { double alpha, z; };
struct EpsAB { double eps, alpha, beta; };
struct NuK { double nu, k; };
struct MuK { double mu, k; };
struct PsiKBar { double psi, kbar; };
struct XiKBar { double xi, kbar; };
struct E1E2 { double e1, e2; };
struct FBar { double f1bar, f2bar; };

using IdentityParams =
    std::variant<AlphaK, AlphaKBar, AlphaZ, EpsAB, NuK, MuK, PsiKBar, XiKBar, E1E2, FBar>;

// Named fields of a parameter record, in declaration order.
std::vector<std::pair<std::string, double>> param_fields(const IdentityParams& p);

// Closed forms. Each throws DomainError outside its domain.
double i1_closed(const AlphaK& p);
double i1_closed_d_form(const AlphaK& p);
double i1_barred_closed(const AlphaKBar& p);
double i1_barred_closed_d_form(const AlphaKBar& p);
double pr3_d_closed(const AlphaZ& p);
double pr3_d_barred_closed(const AlphaKBar& p);
double log_f_closed(const EpsAB& p);
double log_q2_closed(const EpsAB& p);
double pseudo_elliptic_closed(const E1E2& p);
double i3_closed(const NuK& p);
double i4_closed(const MuK& p);
double i5_closed(const MuK& p);
double i6_closed(const NuK& p);
double i2_barred_closed(const PsiKBar& p);
double i3_barred_closed(const PsiKBar& p);
double gr_e_sin_closed(const XiKBar& p);
double gr_f_sin_closed(const XiKBar& p);
double arctan_f_closed(const FBar& p);
double arctan_e_closed(const FBar& p);

// Left-hand side of an identity: the integral of g over [lo, hi] after the
// endpoint kernel named by `kind` is divided out.
struct IntegrandDescriptor {
  quadrature::Function g;
  double lo;
  double hi;
  quadrature::SingularityKind kind;
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  // Parameter record for the grid point (s, t) in [0.05, 0.95]^2; (i, j) are
  // the grid indices, used where a third parameter is needed.
  IdentityParams (*sample)(double s, double t, int i, int j);
};

std::span<const IdentityInfo> registry();
const IdentityInfo& info(IdentityId id);
std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

// The nine identities collected in the closing summary table.
std::span<const IdentityId> summary_identities();

// Closed form and integrand by id. Throws DomainError when the parameter
// record has the wrong type or lies outside the domain; I3 and I6 throw
// SingularityError if the kernel 1 - k'^2 cosh^2(nu) sin^2(u) vanishes on
// the interval.
double closed(IdentityId id, const IdentityParams& p);
IntegrandDescriptor integrand(IdentityId id, const IdentityParams& p);
quadrature::QuadratureResult oracle(IdentityId id, const IdentityParams& p, double tol);

struct VerificationRecord {
  IdentityId id;
  IdentityParams params;
  double closed;
  double oracle;
  double abs_err;
  double rel_err;
  bool pass;
};

inline constexpr double default_tol = 1e-8;
inline constexpr double default_oracle_tol = 1e-10;
inline constexpr double near_zero = 1e-6;
inline constexpr double near_zero_abs_tol = 1e-12;

// rel_err = |closed - oracle| / max(|closed|, 1e-6). Passes on rel_err <= tol,
// or, when |closed| < 1e-6, on abs_err <= 1e-12.
bool within_tolerance(double closed_value, double oracle_value, double tol);
VerificationRecord verify(IdentityId id, const IdentityParams& p, double tol = default_tol,
                          double oracle_tol = default_oracle_tol);

// Grid coordinate in [0.05, 0.95] for index i of n (n >= 2).
double grid_coordinate(int i, int n);

// (alpha, k) from descending eccentricities and back.
AlphaK alpha_k_from_eccentricities(const E1E2& e);
E1E2 eccentricities_from_alpha_k(const AlphaK& p);

// atan((sqrt(q^2 - e2^2) - sqrt(e1^2 - q^2)) / (sqrt(q^2 - e2^2) + sqrt(e1^2 - q^2)))
// for e2 <= q <= e1: +pi/4 at q = e1 and -pi/4 at q = e2.
double endpoint_bracket(double q, double e1, double e2);

// Closed form of int_0^u dt / (1 - k'^2 sin^2 t)^(3/2) = Pi(u, k'^2, k') with
// k' = sqrt(1 - e2^2/e1^2), for u in [0, pi/2].
double pi_special_closed(double u, const E1E2& e);

// q-domain integrals int_{e2}^{e1} E(u(q), k') dq / (1 - q^2) with the two
// amplitude maps
//   lower: sin u = (e1/q) sqrt((q^2 - e2^2)/(e1^2 - e2^2))
//   upper: sin u = sqrt((e1^2 - q^2)/(e1^2 - e2^2))
double q_amplitude_lower(double q, const E1E2& e);
double q_amplitude_upper(double q, const E1E2& e);
double q_integral_lower_closed(const E1E2& e);
double q_integral_upper_closed(const E1E2& e);

// Surface area through four independent integral routes. The first two use
// the descending sort and the eccentricity parametrization; the last two use
// the ascending sort and the barred parametrization. All require three
// distinct axes.
double area_route_i1(const geometry::SemiAxes& axes);
double area_route_log(const geometry::SemiAxes& axes);
double area_route_barred_i1(const geometry::SemiAxes& axes);
double area_route_arctan(const geometry::SemiAxes& axes);

}  // namespace ellint::identities

#endif  // ELLINT_IDENTITIES_HPP

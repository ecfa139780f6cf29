#include "ellint/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"

namespace ellint::identities {
namespace {

using detail::require;
using elliptic::complete_d;
using elliptic::complete_e;
using elliptic::complete_k;
using elliptic::half_pi;
using elliptic::incomplete_d;
using elliptic::incomplete_e;
using elliptic::incomplete_f;
using elliptic::pi;
using quadrature::SingularityKind;

double complement(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

double arctanh(double x) {
  require(std::fabs(x) < 1.0 - 1e-15, "arctanh", "|x| < 1 - 1e-15");
  return 0.5 * std::log((1.0 + x) / (1.0 - x));
}

// F(phi, k) - E(phi, k) without cancellation.
double f_minus_e(double phi, double k) { return k * k * incomplete_d(phi, k); }

void check(const AlphaK& p, const char* fn) {
  require(p.k > 0.0 && p.k < 1.0 && p.alpha > 0.0 && p.alpha < 1.0, fn,
          "1 > k > 0 and 1 > alpha > 0");
}
void check(const AlphaKBar& p, const char* fn) {
  require(p.kbar < 1.0 && p.kbar > p.alphabar && p.alphabar > 0.0, fn, "1 > kbar > alphabar > 0");
}
void check(const AlphaZ& p, const char* fn) {
  require(p.alpha > 0.0 && p.z > 0.0 && std::isfinite(p.alpha) && std::isfinite(p.z), fn,
          "alpha > 0 and z > 0");
}
void check(const EpsAB& p, const char* fn) {
  require(p.eps > p.beta && p.beta > p.alpha && p.alpha > 0.0 && std::isfinite(p.eps), fn,
          "eps > beta > alpha > 0");
}
void check(const NuK& p, const char* fn) {
  require(p.nu > 0.0 && p.k < 1.0 && p.k > std::tanh(p.nu), fn, "1 > k > tanh(nu) > 0");
}
void check(const MuK& p, const char* fn) {
  require(p.k > 0.0 && p.k < 1.0 && p.mu > 0.0 && std::isfinite(p.mu), fn, "1 > k > 0 and mu > 0");
}
void check(const PsiKBar& p, const char* fn) {
  require(p.kbar > 0.0 && p.kbar < 1.0 && p.psi > 0.0 && p.psi < half_pi, fn,
          "1 > kbar > 0 and pi/2 > psi > 0");
}
void check(const XiKBar& p, const char* fn) {
  require(p.kbar > 0.0 && p.kbar < 1.0 && p.xi > 0.0 && p.xi < half_pi, fn,
          "1 > kbar > 0 and pi/2 > xi > 0");
}
void check(const E1E2& p, const char* fn) {
  require(p.e1 < 1.0 && p.e1 > p.e2 && p.e2 > 0.0, fn, "1 > e1 > e2 > 0");
}
void check(const FBar& p, const char* fn) {
  require(std::isfinite(p.f1bar) && p.f1bar > p.f2bar && p.f2bar > 0.0, fn,
          "inf > f1bar > f2bar > 0");
}

// 1 - k'^2 cosh^2(nu) sin^2(u) has a zero on (0, pi/2] iff k' cosh(nu) >= 1.
void check_kernel(const NuK& p, const char* fn) {
  if (p.nu > 0.0 && p.k > 0.0 && p.k < 1.0 && complement(p.k) * std::cosh(p.nu) >= 1.0) {
    throw SingularityError(std::string(fn) + ": requires 1 > k > tanh(nu); otherwise the kernel " +
                           "1 - k'^2 cosh^2(nu) sin^2(u) vanishes inside (0, pi/2)");
  }
}

template <class P>
const P& as(const IdentityParams& v, IdentityId id) {
  const P* p = std::get_if<P>(&v);
  if (p == nullptr) {
    throw DomainError(std::string(to_string(id)) + ": wrong parameter record for this identity");
  }
  return *p;
}

double grid_angle(double s) { return half_pi * s; }

IdentityParams sample_alpha_k(double s, double t, int, int) { return AlphaK{s, t}; }
IdentityParams sample_alpha_k_bar(double s, double t, int, int) { return AlphaKBar{s * t, s}; }
IdentityParams sample_alpha_z(double s, double t, int, int) { return AlphaZ{2.0 * s, 2.0 * t}; }
IdentityParams sample_eps_ab(double s, double t, int i, int j) {
  const double eps = 0.5 + 0.25 * ((i + 2 * j) % 7);
  const double beta = eps * s;
  return EpsAB{eps, beta * t, beta};
}
IdentityParams sample_nu_k(double s, double t, int, int) { return NuK{std::atanh(s * t), s}; }
IdentityParams sample_mu_k(double s, double t, int, int) { return MuK{std::atanh(s), t}; }
IdentityParams sample_psi_k_bar(double s, double t, int, int) {
  return PsiKBar{grid_angle(s), t};
}
IdentityParams sample_xi_k_bar(double s, double t, int, int) { return XiKBar{grid_angle(s), t}; }
IdentityParams sample_e1_e2(double s, double t, int, int) { return E1E2{s, s * t}; }
IdentityParams sample_f_bar(double s, double t, int, int) {
  const double f1 = s / (1.0 - s);
  return FBar{f1, f1 * t};
}

constexpr std::array<IdentityInfo, identity_count> table = {{
    {IdentityId::I1, "I1", sample_alpha_k},
    {IdentityId::I1_BARRED, "I1_BARRED", sample_alpha_k_bar},
    {IdentityId::PR3_D, "PR3_D", sample_alpha_z},
    {IdentityId::PR3_D_BARRED, "PR3_D_BARRED", sample_alpha_k_bar},
    {IdentityId::LOG_F, "LOG_F", sample_eps_ab},
    {IdentityId::LOG_Q2, "LOG_Q2", sample_eps_ab},
    {IdentityId::PSEUDO, "PSEUDO", sample_e1_e2},
    {IdentityId::I3, "I3", sample_nu_k},
    {IdentityId::I4, "I4", sample_mu_k},
    {IdentityId::I5, "I5", sample_mu_k},
    {IdentityId::I6, "I6", sample_nu_k},
    {IdentityId::I2_BARRED, "I2_BARRED", sample_psi_k_bar},
    {IdentityId::I3_BARRED, "I3_BARRED", sample_psi_k_bar},
    {IdentityId::GR_E_SIN, "GR_E_SIN", sample_xi_k_bar},
    {IdentityId::GR_F_SIN, "GR_F_SIN", sample_xi_k_bar},
    {IdentityId::ATAN_F, "ATAN_F", sample_f_bar},
    {IdentityId::ATAN_E, "ATAN_E", sample_f_bar},
}};

constexpr std::array<IdentityId, 9> summary = {
    IdentityId::I1, IdentityId::I1_BARRED, IdentityId::I3,
    IdentityId::I2_BARRED, IdentityId::I4, IdentityId::I5,
    IdentityId::I6, IdentityId::I3_BARRED, IdentityId::LOG_Q2,
};

// E(u, m) sin u cos u / (kernel(u) sqrt(1 - m^2 sin^2 u)) on [0, pi/2], the
// common shape of the I3..I6 and extension integrands; `second` selects E
// over F in the numerator.
IntegrandDescriptor trig_kernel(bool second, double m, double kernel_coeff, double sign) {
  auto g = [=](double u) {
    const double s = std::sin(u), c = std::cos(u);
    const double top = second ? incomplete_e(u, m) : incomplete_f(u, m);
    const double delta = std::sqrt(1.0 - m * m * s * s);
    return top * s * c / ((1.0 + sign * kernel_coeff * s * s) * delta);
  };
  return {g, 0.0, half_pi, SingularityKind::none};
}

}  // namespace

std::vector<std::pair<std::string, double>> param_fields(const IdentityParams& p) {
  return std::visit(
      [](const auto& v) -> std::vector<std::pair<std::string, double>> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AlphaK>) return {{"alpha", v.alpha}, {"k", v.k}};
        if constexpr (std::is_same_v<T, AlphaKBar>)
          return {{"alphabar", v.alphabar}, {"kbar", v.kbar}};
        if constexpr (std::is_same_v<T, AlphaZ>) return {{"alpha", v.alpha}, {"z", v.z}};
        if constexpr (std::is_same_v<T, EpsAB>)
          return {{"eps", v.eps}, {"alpha", v.alpha}, {"beta", v.beta}};
        if constexpr (std::is_same_v<T, NuK>) return {{"nu", v.nu}, {"k", v.k}};
        if constexpr (std::is_same_v<T, MuK>) return {{"mu", v.mu}, {"k", v.k}};
        if constexpr (std::is_same_v<T, PsiKBar>) return {{"psi", v.psi}, {"kbar", v.kbar}};
        if constexpr (std::is_same_v<T, XiKBar>) return {{"xi", v.xi}, {"kbar", v.kbar}};
        if constexpr (std::is_same_v<T, E1E2>) return {{"e1", v.e1}, {"e2", v.e2}};
        if constexpr (std::is_same_v<T, FBar>) return {{"f1bar", v.f1bar}, {"f2bar", v.f2bar}};
      },
      p);
}

double i1_closed(const AlphaK& p) {
  check(p, "i1_closed");
  const double kp = complement(p.k);
  const double kp2 = kp * kp;
  const double a2 = p.alpha * p.alpha;
  const double den = kp2 + p.k * p.k * a2;
  const double root = std::sqrt(den);
  const double ca = complement(p.alpha);
  // sin(lambda) = alpha / sqrt(den), cos(lambda) = k' sqrt(1 - alpha^2) / sqrt(den)
  const double lambda = std::atan2(p.alpha, kp * ca);
  return pi / 4.0 *
         (p.alpha * ca / (den * den) + a2 * incomplete_e(lambda, p.k) / (kp2 * den * root) +
          ca * ca * incomplete_f(lambda, p.k) / (den * root));
}

double i1_closed_d_form(const AlphaK& p) {
  check(p, "i1_closed_d_form");
  const double kp = complement(p.k);
  const double kp2 = kp * kp;
  const double a2 = p.alpha * p.alpha;
  const double den = kp2 + p.k * p.k * a2;
  const double root = std::sqrt(den);
  const double ca = complement(p.alpha);
  const double lambda = std::atan2(p.alpha, kp * ca);
  return pi / 4.0 *
         (p.alpha * ca / (den * den) -
          a2 * p.k * p.k * incomplete_d(lambda, p.k) / (kp2 * den * root) +
          incomplete_f(lambda, p.k) / (kp2 * root));
}

double i1_barred_closed(const AlphaKBar& p) {
  check(p, "i1_barred_closed");
  const double k2 = p.kbar * p.kbar;
  const double a2 = p.alphabar * p.alphabar;
  const double gap = (p.kbar - p.alphabar) * (p.kbar + p.alphabar);
  const double root = std::sqrt(gap);
  const double phi = std::atan2(p.alphabar, root);  // sin phi = alphabar / kbar
  return pi / 4.0 *
         (p.alphabar * complement(p.alphabar) / (k2 * gap) +
          incomplete_f(phi, p.kbar) / (k2 * root) +
          a2 * incomplete_e(phi, p.kbar) / (k2 * gap * root));
}

double i1_barred_closed_d_form(const AlphaKBar& p) {
  check(p, "i1_barred_closed_d_form");
  const double k2 = p.kbar * p.kbar;
  const double a2 = p.alphabar * p.alphabar;
  const double gap = (p.kbar - p.alphabar) * (p.kbar + p.alphabar);
  const double root = std::sqrt(gap);
  const double phi = std::atan2(p.alphabar, root);
  return pi / 4.0 *
         (p.alphabar * complement(p.alphabar) / (k2 * gap) +
          (incomplete_f(phi, p.kbar) - a2 * incomplete_d(phi, p.kbar)) / (gap * root));
}

double pr3_d_closed(const AlphaZ& p) {
  check(p, "pr3_d_closed");
  const double s = p.z * p.z + p.alpha * p.alpha;
  return pi * p.alpha / (2.0 * s) * complete_d(p.alpha / std::sqrt(s));
}

double pr3_d_barred_closed(const AlphaKBar& p) {
  check(p, "pr3_d_barred_closed");
  const double m = p.alphabar / p.kbar;
  const double gap = (p.kbar - p.alphabar) * (p.kbar + p.alphabar);
  return pi * p.alphabar / (2.0 * p.kbar * std::sqrt(gap)) * (complete_k(m) - complete_d(m));
}

double log_f_closed(const EpsAB& p) {
  check(p, "log_f_closed");
  return pi / p.beta * incomplete_f(std::asin(p.beta / p.eps), p.alpha / p.beta);
}

double log_q2_closed(const EpsAB& p) {
  check(p, "log_q2_closed");
  const double e2 = p.eps * p.eps;
  const double r = std::sqrt((p.eps - p.alpha) * (p.eps + p.alpha) * (p.eps - p.beta) *
                             (p.eps + p.beta));
  return pi / p.eps * (e2 - r) +
         pi * p.beta * f_minus_e(std::asin(p.beta / p.eps), p.alpha / p.beta);
}

double pseudo_elliptic_closed(const E1E2& p) {
  check(p, "pseudo_elliptic_closed");
  return half_pi * (1.0 - p.e1 * p.e2 -
                    std::sqrt((1.0 - p.e1) * (1.0 + p.e1) * (1.0 - p.e2) * (1.0 + p.e2)));
}

double i3_closed(const NuK& p) {
  check_kernel(p, "i3_closed");
  check(p, "i3_closed");
  const double kp = complement(p.k);
  const double th = std::tanh(p.nu);
  const double phi = std::asin(th / p.k);
  const double bracket =
      complete_e(kp) * arctanh(th / p.k) - half_pi * th - half_pi * f_minus_e(phi, p.k);
  return bracket / (kp * kp * std::sinh(p.nu) * std::cosh(p.nu));
}

double i6_closed(const NuK& p) {
  check_kernel(p, "i6_closed");
  check(p, "i6_closed");
  const double kp = complement(p.k);
  const double th = std::tanh(p.nu);
  const double phi = std::asin(th / p.k);
  const double bracket = complete_k(kp) * arctanh(th / p.k) - half_pi * incomplete_f(phi, p.k);
  return bracket / (kp * kp * std::sinh(p.nu) * std::cosh(p.nu));
}

double i4_closed(const MuK& p) {
  check(p, "i4_closed");
  const double kp = complement(p.k);
  const double sh = std::sinh(p.mu), ch = std::cosh(p.mu), th = std::tanh(p.mu);
  const double r = std::sqrt(1.0 + kp * kp * sh * sh);
  const double phi = std::asin(th);
  const double bracket = complete_e(kp) * arctanh(p.k * th) -
                         half_pi * (f_minus_e(phi, p.k) + th * r) -
                         half_pi * (ch / sh) * (1.0 - r);
  return -bracket / (kp * kp * sh * ch);
}

double i5_closed(const MuK& p) {
  check(p, "i5_closed");
  const double kp = complement(p.k);
  const double sh = std::sinh(p.mu), ch = std::cosh(p.mu), th = std::tanh(p.mu);
  const double phi = std::asin(th);
  const double bracket = complete_k(kp) * arctanh(p.k * th) - half_pi * incomplete_f(phi, p.k);
  return -bracket / (kp * kp * sh * ch);
}

namespace {

// Brackets of the four kernel forms. The barred pair is written on psi with
// tan beta = tan psi / kbar', the sine pair on xi with tan gamma = kbar' tan xi.
// Each cancels to O(cos) as its angle nears pi/2; the conjugate-amplitude
// relations give B(psi) = -G(pi/2 - psi), so callers reflect past pi/4.
// The kernel brackets below vanish like kbar^2, so they return bracket / kbar^2.
// Under small_kbar the subtraction is done inside positive-term series in
// m = kbar^2 instead of after evaluating K, E, F at full size.
constexpr double small_kbar = 0.5;

// Binomial coefficients C(2n, n) / 4^n.
double central(int n) {
  double c = 1.0;
  for (int i = 1; i <= n; ++i) c *= (2.0 * i - 1.0) / (2.0 * i);
  return c;
}

// (K - pi/2) / m and (pi/2 - E) / m.
double k_excess(double m) {
  double sum = 0.0, mp = 1.0, c = 1.0;
  for (int n = 1; n < 60; ++n) {
    c *= (2.0 * n - 1.0) / (2.0 * n);
    const double t = c * c * mp;
    sum += t;
    if (t < 1e-18 * sum) break;
    mp *= m;
  }
  return half_pi * sum;
}

double e_deficit(double m) {
  double sum = 0.0, mp = 1.0, c = 1.0;
  for (int n = 1; n < 60; ++n) {
    c *= (2.0 * n - 1.0) / (2.0 * n);
    const double t = c * c / (2.0 * n - 1.0) * mp;
    sum += t;
    if (t < 1e-18 * sum) break;
    mp *= m;
  }
  return half_pi * sum;
}

// (F(phi) - phi) / m, or (phi - E(phi)) / m when `e_form`, from
// int_0^phi sin^2n = sum_j c_j s^(2n+2j+1) / (2n+2j+1). Needs sin^2 phi well below 1.
double incomplete_excess(double phi, double m, bool e_form) {
  const double s = std::sin(phi), s2 = s * s;
  double sum = 0.0, sp = s;
  for (int big_n = 1; big_n < 400; ++big_n) {
    sp *= s2;
    double inner = 0.0, mp = 1.0;
    for (int n = 1; n <= big_n; ++n) {
      double cn = central(n);
      if (e_form) cn /= 2.0 * n - 1.0;
      const double t = cn * central(big_n - n) * mp;
      inner += t;
      if (t < 1e-18 * inner) break;
      mp *= m;
    }
    const double t = sp / (2.0 * big_n + 1.0) * inner;
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  return sum;
}

// (atan(m x)) / m without losing digits as m -> 0.
double atan_over(double m, double x) { return m * x < 1e-300 ? x : std::atan(m * x) / m; }

double bracket_e_barred(double psi, double kbar) {
  const double k2 = kbar * kbar;
  const double s = std::sin(psi), c = std::cos(psi);
  const double beta = std::atan2(s, complement(kbar) * c);
  const double r = std::sqrt(1.0 - k2 * c * c);
  if (kbar < small_kbar) {
    return -e_deficit(k2) * beta + half_pi * incomplete_excess(beta, k2, true) +
           half_pi * s * c / (r * (1.0 + r));
  }
  return (complete_e(kbar) * beta - half_pi * incomplete_e(beta, kbar)) / k2 +
         half_pi * s * c / (r * (1.0 + r));
}

double bracket_f_barred(double psi, double kbar) {
  const double k2 = kbar * kbar;
  const double beta = std::atan2(std::sin(psi), complement(kbar) * std::cos(psi));
  if (kbar < small_kbar) return k_excess(k2) * beta - half_pi * incomplete_excess(beta, k2, false);
  return (complete_k(kbar) * beta - half_pi * incomplete_f(beta, kbar)) / k2;
}

// gamma = xi - m g, where g is returned by this helper.
double gamma_shift(double xi, double kbar) {
  const double s = std::sin(xi), c = std::cos(xi), kp = complement(kbar);
  return atan_over(kbar * kbar, s * c / ((1.0 + kp) * (c * c + kp * s * s)));
}

double bracket_e_sin(double xi, double kbar) {
  const double k2 = kbar * kbar;
  const double s = std::sin(xi), c = std::cos(xi);
  const double gamma = std::atan2(complement(kbar) * s, c);
  const double r = std::sqrt(1.0 - k2 * s * s);
  if (kbar < small_kbar) {
    return -e_deficit(k2) * gamma + half_pi * incomplete_excess(xi, k2, true) +
           half_pi * (c * s / (1.0 + r) - gamma_shift(xi, kbar));
  }
  return (complete_e(kbar) * gamma - half_pi * incomplete_e(xi, kbar)) / k2 +
         half_pi * c * s / (1.0 + r);
}

double bracket_f_sin(double xi, double kbar) {
  const double k2 = kbar * kbar;
  const double gamma = std::atan2(complement(kbar) * std::sin(xi), std::cos(xi));
  if (kbar < small_kbar) {
    return k_excess(k2) * gamma - half_pi * (gamma_shift(xi, kbar) + incomplete_excess(xi, k2, false));
  }
  return (complete_k(kbar) * gamma - half_pi * incomplete_f(xi, kbar)) / k2;
}

}  // namespace

double i2_barred_closed(const PsiKBar& p) {
  check(p, "i2_barred_closed");
  const double bracket = p.psi <= pi / 4 ? bracket_e_barred(p.psi, p.kbar)
                                         : -bracket_e_sin(half_pi - p.psi, p.kbar);
  return bracket / (std::sin(p.psi) * std::cos(p.psi));
}

double i3_barred_closed(const PsiKBar& p) {
  check(p, "i3_barred_closed");
  const double bracket = p.psi <= pi / 4 ? bracket_f_barred(p.psi, p.kbar)
                                         : -bracket_f_sin(half_pi - p.psi, p.kbar);
  return bracket / (std::sin(p.psi) * std::cos(p.psi));
}

double gr_e_sin_closed(const XiKBar& p) {
  check(p, "gr_e_sin_closed");
  const double bracket = p.xi <= pi / 4 ? bracket_e_sin(p.xi, p.kbar)
                                        : -bracket_e_barred(half_pi - p.xi, p.kbar);
  return -bracket / (std::sin(p.xi) * std::cos(p.xi));
}

double gr_f_sin_closed(const XiKBar& p) {
  check(p, "gr_f_sin_closed");
  const double bracket = p.xi <= pi / 4 ? bracket_f_sin(p.xi, p.kbar)
                                        : -bracket_f_barred(half_pi - p.xi, p.kbar);
  return -bracket / (std::sin(p.xi) * std::cos(p.xi));
}

double arctan_f_closed(const FBar& p) {
  check(p, "arctan_f_closed");
  const auto [phi, k] = geometry::barred_amplitude_modulus({p.f1bar, p.f2bar});
  return half_pi * incomplete_f(phi, k) / p.f1bar;
}

double arctan_e_closed(const FBar& p) {
  check(p, "arctan_e_closed");
  const auto [phi, k] = geometry::barred_amplitude_modulus({p.f1bar, p.f2bar});
  const double s = std::sin(phi);
  return half_pi * incomplete_e(phi, k) * p.f1bar -
         half_pi * (1.0 - std::sqrt(1.0 - k * k * s * s));
}

std::span<const IdentityInfo> registry() { return table; }

const IdentityInfo& info(IdentityId id) { return table[static_cast<std::size_t>(id)]; }

std::string_view to_string(IdentityId id) { return info(id).name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const IdentityInfo& e : table) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::span<const IdentityId> summary_identities() { return summary; }

double closed(IdentityId id, const IdentityParams& p) {
  switch (id) {
    case IdentityId::I1: return i1_closed(as<AlphaK>(p, id));
    case IdentityId::I1_BARRED: return i1_barred_closed(as<AlphaKBar>(p, id));
    case IdentityId::PR3_D: return pr3_d_closed(as<AlphaZ>(p, id));
    case IdentityId::PR3_D_BARRED: return pr3_d_barred_closed(as<AlphaKBar>(p, id));
    case IdentityId::LOG_F: return log_f_closed(as<EpsAB>(p, id));
    case IdentityId::LOG_Q2: return log_q2_closed(as<EpsAB>(p, id));
    case IdentityId::PSEUDO: return pseudo_elliptic_closed(as<E1E2>(p, id));
    case IdentityId::I3: return i3_closed(as<NuK>(p, id));
    case IdentityId::I4: return i4_closed(as<MuK>(p, id));
    case IdentityId::I5: return i5_closed(as<MuK>(p, id));
    case IdentityId::I6: return i6_closed(as<NuK>(p, id));
    case IdentityId::I2_BARRED: return i2_barred_closed(as<PsiKBar>(p, id));
    case IdentityId::I3_BARRED: return i3_barred_closed(as<PsiKBar>(p, id));
    case IdentityId::GR_E_SIN: return gr_e_sin_closed(as<XiKBar>(p, id));
    case IdentityId::GR_F_SIN: return gr_f_sin_closed(as<XiKBar>(p, id));
    case IdentityId::ATAN_F: return arctan_f_closed(as<FBar>(p, id));
    case IdentityId::ATAN_E: return arctan_e_closed(as<FBar>(p, id));
  }
  throw DomainError("closed: unknown identity");
}

IntegrandDescriptor integrand(IdentityId id, const IdentityParams& p) {
  switch (id) {
    case IdentityId::I1: {
      const AlphaK v = as<AlphaK>(p, id);
      check(v, "integrand(I1)");
      const double kp2 = (1.0 - v.k) * (1.0 + v.k), k2 = v.k * v.k;
      auto g = [=](double u) {
        const double d = kp2 + k2 * u * u;
        return u * complete_e(u) / (d * d);
      };
      return {g, 0.0, v.alpha, SingularityKind::inverse_sqrt_upper};
    }
    case IdentityId::I1_BARRED: {
      const AlphaKBar v = as<AlphaKBar>(p, id);
      check(v, "integrand(I1_BARRED)");
      auto g = [=](double u) {
        const double d = (v.kbar - u) * (v.kbar + u);
        return u * complete_e(u) / (d * d);
      };
      return {g, 0.0, v.alphabar, SingularityKind::inverse_sqrt_upper};
    }
    case IdentityId::PR3_D: {
      const AlphaZ v = as<AlphaZ>(p, id);
      check(v, "integrand(PR3_D)");
      auto g = [=](double u) {
        return u * complete_e(std::min(u / v.alpha, 1.0)) / (v.z * v.z + u * u);
      };
      return {g, 0.0, v.alpha, SingularityKind::inverse_sqrt_upper};
    }
    case IdentityId::PR3_D_BARRED: {
      const AlphaKBar v = as<AlphaKBar>(p, id);
      check(v, "integrand(PR3_D_BARRED)");
      auto g = [=](double u) {
        return u * complete_e(std::min(u / v.alphabar, 1.0)) / ((v.kbar - u) * (v.kbar + u));
      };
      return {g, 0.0, v.alphabar, SingularityKind::inverse_sqrt_upper};
    }
    case IdentityId::LOG_F:
    case IdentityId::LOG_Q2: {
      const EpsAB v = as<EpsAB>(p, id);
      check(v, "integrand(LOG_F/LOG_Q2)");
      const double w = id == IdentityId::LOG_Q2 ? 1.0 : 0.0;
      auto g = [=](double u) {
        const double weight = w == 1.0 ? u * u : 1.0;
        return weight * std::log((v.eps + u) / (v.eps - u));
      };
      return {g, v.alpha, v.beta, SingularityKind::inverse_sqrt_both};
    }
    case IdentityId::PSEUDO: {
      const E1E2 v = as<E1E2>(p, id);
      check(v, "integrand(PSEUDO)");
      auto g = [=](double q) {
        const double num = (v.e1 - q) * (v.e1 + q) * (q - v.e2) * (q + v.e2);
        return std::sqrt(std::max(num, 0.0)) / (q * (1.0 - q) * (1.0 + q));
      };
      return {g, v.e2, v.e1, SingularityKind::none};
    }
    case IdentityId::I3:
    case IdentityId::I6: {
      const NuK v = as<NuK>(p, id);
      check_kernel(v, "integrand(I3/I6)");
      check(v, "integrand(I3/I6)");
      const double kp = complement(v.k);
      const double ch = std::cosh(v.nu);
      return trig_kernel(id == IdentityId::I3, kp, kp * kp * ch * ch, -1.0);
    }
    case IdentityId::I4:
    case IdentityId::I5: {
      const MuK v = as<MuK>(p, id);
      check(v, "integrand(I4/I5)");
      const double kp = complement(v.k);
      const double sh = std::sinh(v.mu);
      return trig_kernel(id == IdentityId::I4, kp, kp * kp * sh * sh, 1.0);
    }
    case IdentityId::I2_BARRED:
    case IdentityId::I3_BARRED: {
      const PsiKBar v = as<PsiKBar>(p, id);
      check(v, "integrand(I2_BARRED/I3_BARRED)");
      const double c = std::cos(v.psi);
      return trig_kernel(id == IdentityId::I2_BARRED, v.kbar, v.kbar * v.kbar * c * c, -1.0);
    }
    case IdentityId::GR_E_SIN:
    case IdentityId::GR_F_SIN: {
      const XiKBar v = as<XiKBar>(p, id);
      check(v, "integrand(GR_E_SIN/GR_F_SIN)");
      const double s = std::sin(v.xi);
      return trig_kernel(id == IdentityId::GR_E_SIN, v.kbar, v.kbar * v.kbar * s * s, -1.0);
    }
    case IdentityId::ATAN_F:
    case IdentityId::ATAN_E: {
      const FBar v = as<FBar>(p, id);
      check(v, "integrand(ATAN_F/ATAN_E)");
      const bool weighted = id == IdentityId::ATAN_E;
      auto g = [=](double q) { return (weighted ? q * q : 1.0) * std::atan(q); };
      return {g, v.f2bar, v.f1bar, SingularityKind::inverse_sqrt_both};
    }
  }
  throw DomainError("integrand: unknown identity");
}

quadrature::QuadratureResult oracle(IdentityId id, const IdentityParams& p, double tol) {
  const IntegrandDescriptor d = integrand(id, p);
  return quadrature::integrate_kind(d.g, d.lo, d.hi, d.kind, tol);
}

bool within_tolerance(double closed_value, double oracle_value, double tol) {
  const double abs_err = std::fabs(closed_value - oracle_value);
  if (std::fabs(closed_value) < near_zero) return abs_err <= near_zero_abs_tol;
  return abs_err / std::fabs(closed_value) <= tol;
}

VerificationRecord verify(IdentityId id, const IdentityParams& p, double tol, double oracle_tol) {
  const double c = closed(id, p);
  const double o = oracle(id, p, oracle_tol).value;
  const double abs_err = std::fabs(c - o);
  const double rel_err = abs_err / std::max(std::fabs(c), near_zero);
  return {id, p, c, o, abs_err, rel_err, within_tolerance(c, o, tol)};
}

double grid_coordinate(int i, int n) {
  require(n >= 2 && i >= 0 && i < n, "grid_coordinate", "n >= 2 and 0 <= i < n");
  return 0.05 + 0.9 * static_cast<double>(i) / static_cast<double>(n - 1);
}

AlphaK alpha_k_from_eccentricities(const E1E2& e) {
  check(e, "alpha_k_from_eccentricities");
  const double alpha =
      std::sqrt((e.e1 - e.e2) * (e.e1 + e.e2) / ((1.0 - e.e2) * (1.0 + e.e2)));
  return {alpha, e.e2 / e.e1};
}

E1E2 eccentricities_from_alpha_k(const AlphaK& p) {
  check(p, "eccentricities_from_alpha_k");
  const double kp2 = (1.0 - p.k) * (1.0 + p.k);
  const double root = std::sqrt(kp2 + p.k * p.k * p.alpha * p.alpha);
  return {p.alpha / root, p.k * p.alpha / root};
}

double endpoint_bracket(double q, double e1, double e2) {
  check(E1E2{e1, e2}, "endpoint_bracket");
  require(q >= e2 && q <= e1, "endpoint_bracket", "e2 <= q <= e1");
  const double lower = std::sqrt((q - e2) * (q + e2));
  const double upper = std::sqrt((e1 - q) * (e1 + q));
  return std::atan((lower - upper) / (lower + upper));
}

double pi_special_closed(double u, const E1E2& e) {
  check(e, "pi_special_closed");
  require(u >= 0.0 && u <= half_pi, "pi_special_closed", "0 <= u <= pi/2");
  const double k = e.e2 / e.e1;
  const double kp = complement(k);
  const double s = std::sin(u), c = std::cos(u);
  const double d2 = 1.0 - kp * kp * s * s;
  // w = ((1 - e2^2) - k'^2 sin^2 u) / (1 - k'^2 sin^2 u), with its three
  // differences written out so that no small quantity is formed by
  // subtraction.
  const double upper_gap = kp * kp * s * s * e.e2 * e.e2 / d2;    // (1 - e2^2) - w
  const double lower_gap = e.e1 * e.e1 * kp * kp * c * c / d2;    // w - (1 - e1^2)
  const double one_minus_w = e.e2 * e.e2 / d2;
  const double radical = std::sqrt(upper_gap * lower_gap) / (e.e1 * std::sqrt(one_minus_w));
  return e.e1 * e.e1 / (e.e2 * e.e2) * (incomplete_e(u, kp) - radical);
}

double q_amplitude_lower(double q, const E1E2& e) {
  check(e, "q_amplitude_lower");
  require(q >= e.e2 && q <= e.e1, "q_amplitude_lower", "e2 <= q <= e1");
  const double s =
      e.e1 / q * std::sqrt((q - e.e2) * (q + e.e2) / ((e.e1 - e.e2) * (e.e1 + e.e2)));
  return std::asin(std::min(s, 1.0));
}

double q_amplitude_upper(double q, const E1E2& e) {
  check(e, "q_amplitude_upper");
  require(q >= e.e2 && q <= e.e1, "q_amplitude_upper", "e2 <= q <= e1");
  const double s = std::sqrt((e.e1 - q) * (e.e1 + q) / ((e.e1 - e.e2) * (e.e1 + e.e2)));
  return std::asin(std::min(s, 1.0));
}

double q_integral_lower_closed(const E1E2& e) {
  check(e, "q_integral_lower_closed");
  const double k = e.e2 / e.e1;
  const double phi = std::asin(e.e1);
  return complete_e(complement(k)) * arctanh(e.e1) - half_pi * e.e2 - half_pi * f_minus_e(phi, k);
}

double q_integral_upper_closed(const E1E2& e) {
  check(e, "q_integral_upper_closed");
  const double k = e.e2 / e.e1;
  const double phi = std::asin(e.e1);
  const double w = std::sqrt((1.0 - e.e1) * (1.0 + e.e1) * (1.0 - e.e2) * (1.0 + e.e2));
  return pi / (2.0 * e.e1) * (1.0 - w) + half_pi * f_minus_e(phi, k) -
         complete_e(complement(k)) * arctanh(e.e2);
}

namespace {

geometry::SemiAxes strict_descending(const geometry::SemiAxes& axes, const char* fn) {
  const geometry::SemiAxes s = geometry::sorted_descending(axes);
  require(s.c > 0.0 && s.a > s.b && s.b > s.c && std::isfinite(s.a), fn,
          "three distinct positive axes");
  return s;
}

}  // namespace

double area_route_i1(const geometry::SemiAxes& axes) {
  const geometry::SemiAxes s = strict_descending(axes, "area_route_i1");
  const geometry::EccentricityPair ep = geometry::eccentricities(s);
  const E1E2 e{ep.e1, ep.e2};
  const AlphaK p = alpha_k_from_eccentricities(e);
  const double gap = (e.e1 - e.e2) * (e.e1 + e.e2);
  const double e1_2 = e.e1 * e.e1;
  const double scale =
      gap * std::sqrt(gap) / (e1_2 * e1_2 * std::sqrt((1.0 - e.e2) * (1.0 + e.e2)));
  return 8.0 * s.a * s.b * scale * i1_closed(p);
}

double area_route_log(const geometry::SemiAxes& axes) {
  const geometry::SemiAxes s = strict_descending(axes, "area_route_log");
  const geometry::EccentricityPair e = geometry::eccentricities(s);
  const EpsAB p{1.0, e.e2, e.e1};
  return 2.0 * pi * s.a * s.b + 2.0 * s.a * s.b * (log_f_closed(p) - log_q2_closed(p));
}

double area_route_barred_i1(const geometry::SemiAxes& axes) {
  const geometry::SemiAxes d = strict_descending(axes, "area_route_barred_i1");
  const geometry::SemiAxes s{d.c, d.b, d.a};
  const geometry::BarredPair f = geometry::barred_params(s);
  const double f1_2 = f.f1bar * f.f1bar;
  const double gap = (f.f1bar - f.f2bar) * (f.f1bar + f.f2bar);
  const double alphabar = std::sqrt(gap / (1.0 + f1_2));
  const double kbar = std::sqrt(gap) / f.f1bar;
  return 8.0 * s.a * s.b * alphabar * kbar * kbar / f1_2 *
         i1_barred_closed(AlphaKBar{alphabar, kbar});
}

double area_route_arctan(const geometry::SemiAxes& axes) {
  const geometry::SemiAxes d = strict_descending(axes, "area_route_arctan");
  const geometry::SemiAxes s{d.c, d.b, d.a};
  const geometry::BarredPair f = geometry::barred_params(s);
  const FBar p{f.f1bar, f.f2bar};
  return 2.0 * pi * s.a * s.b + 4.0 * s.a * s.b * (arctan_f_closed(p) + arctan_e_closed(p));
}

}  // namespace ellint::identities

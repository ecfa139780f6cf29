#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "ellint/cli.hpp"
#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/geometry.hpp"
#include "ellint/identities.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/series.hpp"

namespace ellint::cli {
namespace {

using elliptic::half_pi;
using elliptic::pi;
namespace ids = identities;

struct Tolerances {
  // Oracle comparisons; all replaced by --tol when it is given.
  double identity = ids::default_tol;
  double core_quadrature = 1e-12;
  double reduction = 1e-10;
  double area_quadrature = 1e-7;
  double pi_special = 1e-10;
  double elementary = 1e-10;
  double maclaurin_fd = 1e-4;
  // Algebraic relations.
  double exact = 1e-15;
  double legendre_relation = 1e-12;
  double addition = 1e-11;
  double conjugate = 1e-12;
  double d_identity = 1e-13;
  double permutation = 1e-12;
  double scaling = 1e-12;
  double bowman_legendre = 1e-12;
  double spheroid_limit = 1e-5;
  double shape_forms = 1e-12;
  double kernel_relation = 1e-11;
  double d_form = 1e-13;
  double round_trip = 1e-14;
  double area_route = 1e-10;
  double series_sum = 1e-12;
  double coefficient = 1e-14;
  double maclaurin = 1e-12;
  double ratio = 0.1;

  Fields fields() const {
    return {{"identity", identity},
            {"core_quadrature", core_quadrature},
            {"reduction", reduction},
            {"area_quadrature", area_quadrature},
            {"pi_special", pi_special},
            {"elementary", elementary},
            {"maclaurin_fd", maclaurin_fd},
            {"identity_oracle", ids::default_oracle_tol},
            {"exact", exact},
            {"legendre_relation", legendre_relation},
            {"addition", addition},
            {"conjugate", conjugate},
            {"d_identity", d_identity},
            {"permutation", permutation},
            {"scaling", scaling},
            {"bowman_legendre", bowman_legendre},
            {"spheroid_limit", spheroid_limit},
            {"shape_forms", shape_forms},
            {"kernel_relation", kernel_relation},
            {"d_form", d_form},
            {"round_trip", round_trip},
            {"area_route", area_route},
            {"series_sum", series_sum},
            {"coefficient", coefficient},
            {"maclaurin", maclaurin},
            {"ratio", ratio}};
  }
};

ReportRecord relative(std::string id, Fields params, double closed, double oracle, double tol) {
  const double abs_err = std::fabs(closed - oracle);
  double rel_err = abs_err == 0.0 ? 0.0 : INFINITY;
  if (closed != 0.0) rel_err = abs_err / std::fabs(closed);
  return {std::move(id), std::move(params), closed, oracle, abs_err, rel_err, rel_err <= tol};
}

ReportRecord absolute(std::string id, Fields params, double closed, double oracle, double tol) {
  ReportRecord r = relative(std::move(id), std::move(params), closed, oracle, tol);
  r.pass = r.abs_err <= tol;
  return r;
}

using Task = std::function<ReportRecord()>;

class Plan {
 public:
  explicit Plan(int n) : n_(n) {}
  int n() const { return n_; }
  double g(int i) const { return ids::grid_coordinate(i, n_); }
  void add(Task t) { tasks_.push_back(std::move(t)); }
  std::vector<Task>& tasks() { return tasks_; }

 private:
  int n_;
  std::vector<Task> tasks_;
};

// Odd extension of z -> F(asin z, k).
double f_of_asin(double z, double k) {
  const double v = elliptic::incomplete_f(std::asin(std::min(std::fabs(z), 1.0)), k);
  return z < 0.0 ? -v : v;
}

// Central-difference (2m+1)-th derivative at 0 for m <= 2, with one
// Richardson step.
double fd_odd_derivative(int m, double k, double h) {
  auto f = [k](double z) { return f_of_asin(z, k); };
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

// (2m)! sum_{i+j=m} c_i c_j k^{2j} with c_i = binom(2i, i) / 4^i: the
// (2m+1)-th Maclaurin derivative of F(asin z, k) from the product of the two
// binomial series under the integral sign.
double maclaurin_reference(int m, double k) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  c[0] = 1.0;
  for (int i = 1; i <= m; ++i) c[i] = c[i - 1] * (2.0 * i - 1.0) / (2.0 * i);
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) sum += c[m - j] * c[j] * std::pow(k * k, j);
  for (int j = 2; j <= 2 * m; ++j) sum *= j;
  return sum;
}

void core_checks(Plan& p, const Tolerances& t) {
  p.add([t] {
    return absolute("K_AT_ZERO", {{"k", 0.0}}, elliptic::complete_k(0.0), half_pi, t.exact);
  });
  p.add([t] {
    return absolute("E_AT_ZERO", {{"k", 0.0}}, elliptic::complete_e(0.0), half_pi, t.exact);
  });
  p.add([t] {
    return absolute("E_AT_ONE", {{"k", 1.0}}, elliptic::complete_e(1.0), 1.0, t.exact);
  });
  const int n = p.n();
  for (int i = 0; i < 2 * n; ++i) {
    const double k = ids::grid_coordinate(i, 2 * n);
    p.add([t, k] {
      const double kp = std::sqrt((1 - k) * (1 + k));
      const double K = elliptic::complete_k(k), Kp = elliptic::complete_k(kp);
      const double lhs = elliptic::complete_e(k) * Kp + elliptic::complete_e(kp) * K - K * Kp;
      return relative("LEGENDRE_RELATION", {{"k", k}}, lhs, half_pi, t.legendre_relation);
    });
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double phi = half_pi * p.g(i), k = p.g(j);
      const double qtol = std::min(t.core_quadrature, 1e-13);
      p.add([=] {
        const double o = quadrature::integrate(
            [k](double x) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(x) * std::sin(x)); },
            0.0, phi, qtol).value;
        return relative("F_QUADRATURE", {{"phi", phi}, {"k", k}}, elliptic::incomplete_f(phi, k), o,
                        t.core_quadrature);
      });
      p.add([=] {
        const double o = quadrature::integrate(
            [k](double x) { return std::sqrt(1.0 - k * k * std::sin(x) * std::sin(x)); }, 0.0,
            phi, qtol).value;
        return relative("E_QUADRATURE", {{"phi", phi}, {"k", k}}, elliptic::incomplete_e(phi, k), o,
                        t.core_quadrature);
      });
      p.add([=] {
        const double lhs = k * k * elliptic::incomplete_d(phi, k) + elliptic::incomplete_e(phi, k);
        return relative("D_IDENTITY", {{"phi", phi}, {"k", k}}, elliptic::incomplete_f(phi, k), lhs,
                        t.d_identity);
      });
      const double kp = p.g(j);
      for (auto branch : {elliptic::AdditionBranch::lower, elliptic::AdditionBranch::upper}) {
        p.add([=] {
          const double res = elliptic::addition_residual(phi, kp, branch);
          const char* id = branch == elliptic::AdditionBranch::lower ? "ADDITION_LOWER"
                                                                      : "ADDITION_UPPER";
          return absolute(id, {{"phi1", phi}, {"kprime", kp}}, res, 0.0, t.addition);
        });
      }
      const double theta = half_pi * p.g(i);
      p.add([=] {
        const double delta = elliptic::conjugate_delta(theta, k);
        const double sum = elliptic::incomplete_f(theta, k) + elliptic::incomplete_f(delta, k);
        return relative("CONJUGATE_DELTA", {{"theta", theta}, {"k", k}}, elliptic::complete_k(k),
                        sum, t.conjugate);
      });
    }
  }
}

double axis(double g) { return 0.1 + 9.9 * (g - 0.05) / 0.9; }

void geometry_checks(Plan& p, const Tolerances& t, std::uint64_t seed) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        const double a = axis(p.g(i)), b = axis(p.g(j)), c = axis(p.g(l));
        p.add([=] {
          const double base = geometry::surface_area({a, b, c});
          const double perms[5] = {
              geometry::surface_area({a, c, b}), geometry::surface_area({b, a, c}),
              geometry::surface_area({b, c, a}), geometry::surface_area({c, a, b}),
              geometry::surface_area({c, b, a})};
          double worst = base;
          for (double v : perms) {
            if (std::fabs(v - base) > std::fabs(worst - base)) worst = v;
          }
          return relative("AREA_PERMUTATION", {{"a", a}, {"b", b}, {"c", c}}, base, worst,
                          t.permutation);
        });
        p.add([=] {
          const double s = 2.5;
          const double scaled = geometry::surface_area({s * a, s * b, s * c});
          return relative("AREA_SCALING", {{"a", a}, {"b", b}, {"c", c}, {"s", s}},
                          s * s * geometry::surface_area({a, b, c}), scaled, t.scaling);
        });
        // Strictly ordered a > b > c.
        const double cs = 0.5 + 5.0 * p.g(i);
        const double bs = cs * (1.0 + 2.0 * p.g(j));
        const double as = bs * (1.0 + 2.0 * p.g(l));
        p.add([=] {
          return relative("AREA_LEGENDRE", {{"a", as}, {"b", bs}, {"c", cs}},
                          geometry::surface_area_bowman({as, bs, cs}),
                          geometry::surface_area_legendre({as, bs, cs}), t.bowman_legendre);
        });
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = axis(p.g(i)), ratio = p.g(j);
      p.add([=] {
        const double c = r * ratio;
        return relative("AREA_OBLATE_LIMIT", {{"r", r}, {"c", c}, {"gap", 1e-6}},
                        geometry::oblate_area(r, c),
                        geometry::surface_area({r, r * (1.0 - 1e-6), c}), t.spheroid_limit);
      });
      p.add([=] {
        const double c = r / ratio;
        return relative("AREA_PROLATE_LIMIT", {{"r", r}, {"c", c}, {"gap", 1e-6}},
                        geometry::prolate_area(r, c),
                        geometry::surface_area({c, r * (1.0 + 1e-6), r}), t.spheroid_limit);
      });
      const double cs = 0.5 + 5.0 * p.g(i);
      const double bs = cs * (1.0 + 2.0 * p.g(j));
      const double as = bs * (1.0 + 2.0 * p.g((i + j) % n));
      p.add([=] {
        const geometry::SemiAxes d{as, bs, cs};
        return relative("AREA_ECCENTRIC", {{"a", as}, {"b", bs}, {"c", cs}},
                        geometry::surface_area_bowman(d),
                        geometry::surface_area_eccentric(cs, geometry::eccentricities(d)),
                        t.shape_forms);
      });
      p.add([=] {
        const geometry::SemiAxes asc{cs, bs, as};
        return relative("AREA_BARRED", {{"a", cs}, {"b", bs}, {"c", as}},
                        geometry::surface_area_ascending(asc),
                        geometry::surface_area_barred(cs, geometry::barred_params(asc)),
                        t.shape_forms);
      });
      p.add([=] {
        const geometry::SemiAxes asc{cs, bs, as};
        const double e1 = std::sqrt((as - cs) * (as + cs)) / as;
        const double e2 = std::sqrt((as - bs) * (as + bs)) / as;
        return relative("AREA_ROTATED_ECCENTRIC", {{"a", cs}, {"b", bs}, {"c", as}},
                        geometry::surface_area_ascending(asc),
                        geometry::surface_area_rotated_eccentric(cs, e1, e2), t.shape_forms);
      });
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < n; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    p.add([=] {
      const double oracle_tol = std::min(t.area_quadrature * 1e-3, 1e-10);
      const double q = quadrature::surface_area_quadrature(a, b, c, oracle_tol).value;
      return relative("AREA_QUADRATURE", {{"a", a}, {"b", b}, {"c", c}},
                      geometry::surface_area({a, b, c}), q, t.area_quadrature);
    });
  }
}

void integral_checks(Plan& p, const Tolerances& t, std::uint64_t seed) {
  const int n = p.n();
  for (const ids::IdentityInfo& info : ids::registry()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const ids::IdentityParams params = info.sample(p.g(i), p.g(j), i, j);
        const ids::IdentityId id = info.id;
        p.add([=] {
          const ids::VerificationRecord v = ids::verify(id, params, t.identity);
          return ReportRecord{std::string(info.name), ids::param_fields(params), v.closed,
                              v.oracle, v.abs_err, v.rel_err, v.pass};
        });
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double s = p.g(i), r = p.g(j);
      p.add([=] {
        const ids::AlphaK q{s, r};
        return relative("I1_D_FORM", {{"alpha", s}, {"k", r}}, ids::i1_closed(q),
                        ids::i1_closed_d_form(q), t.d_form);
      });
      p.add([=] {
        const ids::AlphaKBar q{s * r, s};
        return relative("I1_BARRED_D_FORM", {{"alphabar", s * r}, {"kbar", s}},
                        ids::i1_barred_closed(q), ids::i1_barred_closed_d_form(q), t.d_form);
      });
      const ids::E1E2 e{s, s * r};
      p.add([=] {
        const ids::E1E2 back =
            ids::eccentricities_from_alpha_k(ids::alpha_k_from_eccentricities(e));
        ReportRecord r1 = relative("ROUND_TRIP", {{"e1", e.e1}, {"e2", e.e2}}, e.e1, back.e1,
                                   t.round_trip);
        const ReportRecord r2 = relative("ROUND_TRIP", {}, e.e2, back.e2, t.round_trip);
        if (r2.rel_err > r1.rel_err) {
          r1.closed = r2.closed;
          r1.oracle = r2.oracle;
          r1.abs_err = r2.abs_err;
          r1.rel_err = r2.rel_err;
        }
        r1.pass = r1.pass && r2.pass;
        return r1;
      });
      p.add([=] {
        const double up = ids::endpoint_bracket(e.e1, e.e1, e.e2);
        const double down = ids::endpoint_bracket(e.e2, e.e1, e.e2);
        ReportRecord rec = absolute("ENDPOINT_BRACKET", {{"e1", e.e1}, {"e2", e.e2}}, up - down,
                                    pi / 2, 0.0);
        rec.pass = up == pi / 4 && down == -pi / 4;
        return rec;
      });
      const double u = half_pi * p.g((i + j) % n);
      p.add([=] {
        const double k = e.e2 / e.e1;
        const double kp2 = (1 - k) * (1 + k);
        const double o = quadrature::integrate(
            [kp2](double x) {
              const double d = 1.0 - kp2 * std::sin(x) * std::sin(x);
              return 1.0 / (d * std::sqrt(d));
            },
            0.0, u, 1e-13).value;
        return relative("PI_SPECIAL", {{"u", u}, {"e1", e.e1}, {"e2", e.e2}},
                        ids::pi_special_closed(u, e), o, t.pi_special);
      });
      p.add([=] {
        const double o = quadrature::integrate_singular_pair([](double q) { return q; }, e.e2,
                                                             e.e1, 1e-13).value;
        return relative("ELEMENTARY_Q", {{"e1", e.e1}, {"e2", e.e2}}, half_pi, o, t.elementary);
      });
      p.add([=] {
        const double w = -e.e1 * e.e1 * e.e2 * e.e2;
        const double o = quadrature::integrate_singular_pair([w](double q) { return w / q; },
                                                             e.e2, e.e1, 1e-13).value;
        return relative("ELEMENTARY_INV_Q", {{"e1", e.e1}, {"e2", e.e2}}, -pi * e.e1 * e.e2 / 2, o,
                        t.elementary);
      });
      p.add([=] {
        const double k = e.e2 / e.e1;
        const double scale = e.e2 * (1 - k) * (1 + k) / ((1 - e.e2) * (1 + e.e2));
        const double o =
            scale * ids::oracle(ids::IdentityId::I3, ids::NuK{std::atanh(e.e2), k}, 1e-12).value;
        return relative("Q_FORM_LOWER", {{"e1", e.e1}, {"e2", e.e2}},
                        ids::q_integral_lower_closed(e), o, t.identity);
      });
      p.add([=] {
        const double k = e.e2 / e.e1;
        const double scale = e.e1 * (1 - k) * (1 + k) / ((1 - e.e1) * (1 + e.e1));
        const double o =
            scale * ids::oracle(ids::IdentityId::I4, ids::MuK{std::atanh(e.e1), k}, 1e-12).value;
        return relative("Q_FORM_UPPER", {{"e1", e.e1}, {"e2", e.e2}},
                        ids::q_integral_upper_closed(e), o, t.identity);
      });
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  for (int i = 0; i < 2 * n; ++i) {
    const geometry::SemiAxes ax{dist(rng), dist(rng), dist(rng)};
    const Fields f{{"a", ax.a}, {"b", ax.b}, {"c", ax.c}};
    p.add([=] {
      return relative("AREA_ROUTE_I1", f, geometry::surface_area(ax), ids::area_route_i1(ax),
                      t.area_route);
    });
    p.add([=] {
      return relative("AREA_ROUTE_LOG", f, geometry::surface_area(ax), ids::area_route_log(ax),
                      t.area_route);
    });
    p.add([=] {
      return relative("AREA_ROUTE_BARRED_I1", f,
                      geometry::surface_area_ascending(geometry::sorted_ascending(ax)),
                      ids::area_route_barred_i1(ax), t.area_route);
    });
    p.add([=] {
      return relative("AREA_ROUTE_ARCTAN", f,
                      geometry::surface_area_ascending(geometry::sorted_ascending(ax)),
                      ids::area_route_arctan(ax), t.area_route);
    });
  }
}

void series_checks(Plan& p, const Tolerances& t) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double e1 = 0.05 + 0.85 * static_cast<double>(i) / (n - 1);
      const double e2 = e1 * p.g(j);
      const Fields f{{"e1", e1}, {"e2", e2}};
      p.add([=] {
        return relative("SIGMA1", f, series::sigma1_reference(e1, e2),
                        series::sigma1_sum(e1, e2, 1e-16).value, t.series_sum);
      });
      p.add([=] {
        return relative("SIGMA2", f, series::sigma2_reference(e1, e2),
                        series::sigma2_sum(e1, e2, 1e-16).value, t.series_sum);
      });
      const double x = e1 * e1, y = e2 * e2;
      const double dxy = (e1 - e2) * (e1 + e2);
      p.add([=] {
        const auto o = series::omega_coefficients(e1, e2, 3).terms;
        const auto th = series::theta_terms(e1, e2, 3).terms;
        const auto ps = series::psi_terms(e1, e2, 3).terms;
        const double expected[7] = {
            (3 * x * x + 2 * x * y + 3 * y * y) / 24,
            (5 * x * x * x + 3 * x * x * y + 3 * x * y * y + 5 * y * y * y) / 80,
            (x + y) / 2,
            dxy * dxy / 8,
            (x + y) * dxy * dxy / 16,
            x * y / 3,
            (x * x * y + x * y * y) / 10};
        const double got[7] = {o[2], o[3], th[1], th[2], th[3], ps[2], ps[3]};
        ReportRecord worst = relative("COEFFICIENT_FORMS", f, expected[0], got[0], t.coefficient);
        for (int q = 1; q < 7; ++q) {
          ReportRecord r = relative("COEFFICIENT_FORMS", f, expected[q], got[q], t.coefficient);
          if (r.rel_err > worst.rel_err) worst = r;
        }
        return worst;
      });
      p.add([=] {
        const auto o = series::omega_coefficients(e1, e2, 5).terms;
        const auto th = series::theta_terms(e1, e2, 5).terms;
        const auto ps = series::psi_terms(e1, e2, 5).terms;
        ReportRecord worst = relative("OMEGA_THETA_PSI", f, o[1], th[1] + ps[1], t.coefficient);
        for (int m = 2; m <= 5; ++m) {
          ReportRecord r = relative("OMEGA_THETA_PSI", f, o[m], th[m] + ps[m], t.coefficient);
          if (r.rel_err > worst.rel_err) worst = r;
        }
        return worst;
      });
    }
  }
  for (int i = 0; i < n; ++i) {
    const double e1 = 0.3 + 0.6 * p.g(i), e2 = e1 * p.g(n - 1 - i);
    const double k = e2 / e1;
    for (int m = 0; m <= 6; ++m) {
      p.add([=] {
        return relative("MACLAURIN_SERIES", {{"e1", e1}, {"e2", e2}, {"m", double(m)}},
                        series::f_maclaurin_derivative(m, e1, e2), maclaurin_reference(m, k),
                        t.maclaurin);
      });
    }
    for (int m = 0; m <= 2; ++m) {
      p.add([=] {
        return relative("MACLAURIN_FD", {{"e1", e1}, {"e2", e2}, {"m", double(m)}},
                        series::f_maclaurin_derivative(m, e1, e2), fd_odd_derivative(m, k, 1e-2),
                        t.maclaurin_fd);
      });
    }
    p.add([=] {
      const double a1 = 0.9, a2 = 0.9 * p.g(i);
      const auto a = series::a_coefficients(a1, a2, 201).terms;
      return relative("A_RATIO", {{"e1", a1}, {"e2", a2}, {"m", 200.0}}, a1 * a1, a[201] / a[200],
                      t.ratio);
    });
  }
}

void extension_checks(Plan& p, const Tolerances& t) {
  const int n = p.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double xi = half_pi * p.g(i), kb = p.g(j);
      const Fields f{{"xi", xi}, {"kbar", kb}};
      p.add([=] {
        return relative("KERNEL_E", f, ids::gr_e_sin_closed({xi, kb}),
                        ids::i2_barred_closed({half_pi - xi, kb}), t.kernel_relation);
      });
      p.add([=] {
        return relative("KERNEL_F", f, ids::gr_f_sin_closed({xi, kb}),
                        ids::i3_barred_closed({half_pi - xi, kb}), t.kernel_relation);
      });
      const double phi = half_pi * p.g(i), km = 3.0 * p.g(j);
      p.add([=] {
        const auto r = elliptic::imaginary_modulus_reduce(phi, km);
        const double o = quadrature::integrate(
            [km](double x) { return 1.0 / std::sqrt(1.0 + km * km * std::sin(x) * std::sin(x)); },
            0.0, phi, 1e-13).value;
        return relative("IMAGINARY_MODULUS_F", {{"phi", phi}, {"k", km}}, r.f_value, o,
                        t.reduction);
      });
      p.add([=] {
        const auto r = elliptic::imaginary_modulus_reduce(phi, km);
        const double o = quadrature::integrate(
            [km](double x) { return std::sqrt(1.0 + km * km * std::sin(x) * std::sin(x)); }, 0.0,
            phi, 1e-13).value;
        return relative("IMAGINARY_MODULUS_E", {{"phi", phi}, {"k", km}}, r.e_value, o,
                        t.reduction);
      });
      const double x = 2.0 * p.g(i), ka = p.g(j);
      p.add([=] {
        const auto r = elliptic::imaginary_argument_reduce(x, ka);
        const double o = quadrature::integrate(
            [ka](double s) { return 1.0 / std::sqrt(1.0 + ka * ka * std::sinh(s) * std::sinh(s)); },
            0.0, x, 1e-13).value;
        return relative("IMAGINARY_ARGUMENT_F", {{"phi_hyp", x}, {"k", ka}}, r.f_value, o,
                        t.reduction);
      });
      p.add([=] {
        const auto r = elliptic::imaginary_argument_reduce(x, ka);
        const double o = quadrature::integrate(
            [ka](double s) { return std::sqrt(1.0 + ka * ka * std::sinh(s) * std::sinh(s)); }, 0.0,
            x, 1e-13).value;
        return relative("IMAGINARY_ARGUMENT_E", {{"phi_hyp", x}, {"k", ka}}, r.e_value, o,
                        t.reduction);
      });
    }
  }
}

void execute(std::vector<Task>& tasks, unsigned threads, Report& report) {
  std::vector<ReportRecord> out(tasks.size());
  std::vector<char> stalled(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (const NonConvergenceError& e) {
        stalled[i] = 1;
        out[i] = ReportRecord{"NON_CONVERGENCE", {}, NAN, e.best(), NAN, NAN, false};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (stalled[i]) report.non_converged = true;
    report.records.push_back(std::move(out[i]));
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::all, Suite::core, Suite::geometry, Suite::integrals, Suite::series,
                  Suite::extensions}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::core: return "core";
    case Suite::geometry: return "geometry";
    case Suite::integrals: return "integrals";
    case Suite::series: return "series";
    case Suite::extensions: return "extensions";
  }
  return "unknown";
}

Report run_suite(const VerifyOptions& opts) {
  detail::require(opts.grid >= 2, "verify", "grid >= 2");
  detail::require(!opts.tol || *opts.tol > 0.0, "verify", "tol > 0");
  Tolerances t;
  if (opts.tol) {
    const double v = *opts.tol;
    t.identity = t.core_quadrature = t.reduction = t.area_quadrature = t.pi_special =
        t.elementary = t.maclaurin_fd = v;
  }
  Plan plan(opts.grid);
  const bool all = opts.suite == Suite::all;
  if (all || opts.suite == Suite::core) core_checks(plan, t);
  if (all || opts.suite == Suite::geometry) geometry_checks(plan, t, 20240611);
  if (all || opts.suite == Suite::integrals) integral_checks(plan, t, 20240612);
  if (all || opts.suite == Suite::series) series_checks(plan, t);
  if (all || opts.suite == Suite::extensions) extension_checks(plan, t);

  Report report;
  report.suite = std::string(to_string(opts.suite));
  report.grid = opts.grid;
  report.tolerances = t.fields();
  execute(plan.tasks(), opts.threads, report);
  return report;
}

}  // namespace ellint::cli

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"
#include "ellint/geometry.hpp"
#include "ellint/identities.hpp"
#include "ellint/quadrature.hpp"
#include "oracles.hpp"

using namespace ellint;
using namespace ellint::identities;
using oracles::half_pi;
using oracles::pi;
using oracles::rel;

namespace {

struct Frozen {
  IdentityId id;
  IdentityParams params;
  double value;
};

// Left-hand sides integrated by mpmath (tanh-sinh, 40 digits) directly from
// their definitions.
const Frozen frozen[] = {
    {IdentityId::I1, AlphaK{0.5, 0.6}, 1.5428567047361814},
    {IdentityId::I1_BARRED, AlphaKBar{0.3, 0.8}, 1.387239973573088},
    {IdentityId::PR3_D, AlphaZ{0.7, 0.4}, 2.142652366952894},
    {IdentityId::PR3_D_BARRED, AlphaKBar{0.3, 0.8}, 0.6354108023105237},
    {IdentityId::LOG_F, EpsAB{1.5, 0.4, 0.9}, 2.2753935457058874},
    {IdentityId::LOG_Q2, EpsAB{1.5, 0.4, 0.9}, 1.1256884959317905},
    {IdentityId::PSEUDO, E1E2{0.8, 0.4}, 0.2043463339529852},
    {IdentityId::I3, NuK{0.3, 0.6}, 0.9578717978736192},
    {IdentityId::I4, MuK{1.0, 0.3}, 0.32297504815000166},
    {IdentityId::I5, MuK{1.0, 0.3}, 0.46191481511730564},
    {IdentityId::I6, NuK{0.3, 0.6}, 1.2242026867058229},
    {IdentityId::I2_BARRED, PsiKBar{0.9, 0.7}, 0.5072409050668735},
    {IdentityId::I3_BARRED, PsiKBar{0.9, 0.7}, 0.5908365286058486},
    {IdentityId::GR_E_SIN, XiKBar{0.4, 0.7}, 0.46687300256452685},
    {IdentityId::GR_F_SIN, XiKBar{0.4, 0.7}, 0.5424474122049847},
    {IdentityId::ATAN_F, FBar{2.0, 0.5}, 1.100031057096904},
    {IdentityId::ATAN_E, FBar{2.0, 0.5}, 2.0770682584629383},
};

}  // namespace

TEST_SUITE("integral_identities") {

TEST_CASE("closed forms match frozen references") {
  for (const Frozen& f : frozen) {
    CAPTURE(std::string(to_string(f.id)));
    CHECK(rel(closed(f.id, f.params), f.value) < 1e-13);
  }
}

TEST_CASE("quadrature oracle matches frozen references") {
  for (const Frozen& f : frozen) {
    CAPTURE(std::string(to_string(f.id)));
    const quadrature::QuadratureResult r = oracle(f.id, f.params, 1e-12);
    CHECK(rel(r.value, f.value) < 1e-11);
  }
}

TEST_CASE("registry covers every identity exactly once") {
  const auto reg = registry();
  REQUIRE(reg.size() == static_cast<std::size_t>(identity_count));
  std::set<std::string> names;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(static_cast<std::size_t>(reg[i].id) == i);
    CHECK(names.insert(std::string(reg[i].name)).second);
    CHECK(parse_identity(reg[i].name) == reg[i].id);
    CHECK(to_string(reg[i].id) == reg[i].name);
    CHECK(&info(reg[i].id) == &reg[i]);
  }
  // The last enumerator maps to the last registry slot.
  CHECK(static_cast<int>(IdentityId::ATAN_E) == identity_count - 1);
  CHECK_FALSE(parse_identity("I7").has_value());
  CHECK_FALSE(parse_identity("i1").has_value());
  std::set<IdentityId> summary(summary_identities().begin(), summary_identities().end());
  CHECK(summary.size() == 9);
}

TEST_CASE("every sampler stays inside its domain") {
  for (const IdentityInfo& inf : registry()) {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const IdentityParams p = inf.sample(grid_coordinate(i, 10), grid_coordinate(j, 10), i, j);
        CAPTURE(std::string(inf.name));
        CHECK_NOTHROW(closed(inf.id, p));
        CHECK_NOTHROW(integrand(inf.id, p));
      }
    }
  }
}

TEST_CASE("identities hold on a grid") {
  for (const IdentityInfo& inf : registry()) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const IdentityParams p = inf.sample(grid_coordinate(i, 5), grid_coordinate(j, 5), i, j);
        const VerificationRecord v = verify(inf.id, p);
        CAPTURE(std::string(inf.name));
        CAPTURE(v.closed);
        CAPTURE(v.oracle);
        CHECK(v.pass);
      }
    }
  }
}

TEST_CASE("tolerance rule") {
  CHECK(within_tolerance(1.0, 1.0 + 5e-9, 1e-8));
  CHECK_FALSE(within_tolerance(1.0, 1.0 + 2e-8, 1e-8));
  // Near zero the absolute floor applies.
  CHECK(within_tolerance(1e-9, 1e-9 + 5e-13, 1e-8));
  CHECK_FALSE(within_tolerance(1e-9, 1e-9 + 5e-12, 1e-8));
  const VerificationRecord v = verify(IdentityId::PSEUDO, E1E2{0.8, 0.4});
  CHECK(v.rel_err == doctest::Approx(v.abs_err / std::fabs(v.closed)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(closed(IdentityId::I1, E1E2{0.5, 0.2}), DomainError);
  CHECK_THROWS_AS(i1_closed({1.2, 0.5}), DomainError);
  CHECK_THROWS_AS(i1_barred_closed({0.9, 0.8}), DomainError);
  CHECK_THROWS_AS(log_f_closed({0.5, 0.4, 0.9}), DomainError);
  CHECK_THROWS_AS(pseudo_elliptic_closed({0.3, 0.6}), DomainError);
  CHECK_THROWS_AS(arctan_f_closed({0.5, 2.0}), DomainError);
  CHECK_THROWS_AS(i4_closed({-1.0, 0.3}), DomainError);
  // k <= tanh(nu): the kernel vanishes inside the interval.
  CHECK_THROWS_AS(i3_closed({0.9, 0.5}), SingularityError);
  CHECK_THROWS_AS(i6_closed({0.9, 0.5}), SingularityError);
  CHECK_THROWS_AS(oracle(IdentityId::I3, NuK{0.9, 0.5}, 1e-10), SingularityError);
  CHECK_THROWS_AS(i3_closed({0.9, 0.5}), DomainError);
}

TEST_CASE("D-forms of the I1 family") {
  std::mt19937_64 g(31);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  for (int i = 0; i < 100; ++i) {
    const double a = u(g), k = u(g);
    CHECK(rel(i1_closed_d_form({a, k}), i1_closed({a, k})) < 1e-13);
    CHECK(rel(i1_barred_closed_d_form({a * k, k}), i1_barred_closed({a * k, k})) < 1e-13);
  }
}

TEST_CASE("eccentricity round trip") {
  std::mt19937_64 g(32);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 200; ++i) {
    const double e1 = u(g), e2 = e1 * u(g);
    const E1E2 back = eccentricities_from_alpha_k(alpha_k_from_eccentricities({e1, e2}));
    CHECK(rel(back.e1, e1) < 1e-14);
    CHECK(rel(back.e2, e2) < 1e-14);
  }
}

TEST_CASE("endpoint bracket") {
  for (double e1 : {0.3, 0.7, 0.95}) {
    for (double r : {0.1, 0.5, 0.9}) {
      const double e2 = e1 * r;
      CHECK(endpoint_bracket(e1, e1, e2) == pi / 4);
      CHECK(endpoint_bracket(e2, e1, e2) == -pi / 4);
      const double mid = std::sqrt((e1 * e1 + e2 * e2) / 2);
      CHECK(std::fabs(endpoint_bracket(mid, e1, e2)) < 1e-15);
    }
  }
}

TEST_CASE("special third-kind integral") {
  std::mt19937_64 g(33);
  std::uniform_real_distribution<double> u(0.05, 0.95), uu(0.0, half_pi);
  for (int i = 0; i < 50; ++i) {
    const double e1 = u(g), e2 = e1 * u(g), t = uu(g);
    const double k = e2 / e1, kp2 = (1 - k) * (1 + k);
    const double want = oracles::tanh_sinh(
        [kp2](double x) {
          const double d = 1.0 - kp2 * std::sin(x) * std::sin(x);
          return 1.0 / (d * std::sqrt(d));
        },
        0.0, t);
    CHECK(rel(pi_special_closed(t, {e1, e2}), want) < 1e-12);
  }
}

TEST_CASE("elementary integrals over the eccentricity interval") {
  for (double e1 : {0.3, 0.8}) {
    for (double e2 : {0.1, 0.25}) {
      const double w = e1 * e1 * e2 * e2;
      CHECK(rel(quadrature::integrate_singular_pair([](double q) { return q; }, e2, e1, 1e-13).value,
                half_pi) < 1e-12);
      CHECK(rel(quadrature::integrate_singular_pair([w](double q) { return -w / q; }, e2, e1,
                                                    1e-13).value,
                -pi * e1 * e2 / 2) < 1e-12);
    }
  }
}

TEST_CASE("q-domain integrals") {
  std::mt19937_64 g(34);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int i = 0; i < 20; ++i) {
    const double e1 = u(g), e2 = e1 * u(g);
    const E1E2 e{e1, e2};
    const double k = e2 / e1, kp = std::sqrt((1 - k) * (1 + k));
    auto integrand_lower = [&](double q) {
      return elliptic::incomplete_e(q_amplitude_lower(q, e), kp) / ((1 - q) * (1 + q));
    };
    auto integrand_upper = [&](double q) {
      return elliptic::incomplete_e(q_amplitude_upper(q, e), kp) / ((1 - q) * (1 + q));
    };
    CAPTURE(e1);
    CAPTURE(e2);
    CHECK(rel(q_integral_lower_closed(e), oracles::tanh_sinh(integrand_lower, e2, e1)) < 1e-11);
    CHECK(rel(q_integral_upper_closed(e), oracles::tanh_sinh(integrand_upper, e2, e1)) < 1e-11);
    // Change of variables onto the hyperbolic-kernel identities.
    const double lower_scale = e2 * kp * kp / ((1 - e2) * (1 + e2));
    const double upper_scale = e1 * kp * kp / ((1 - e1) * (1 + e1));
    CHECK(rel(q_integral_lower_closed(e), lower_scale * i3_closed({std::atanh(e2), k})) < 1e-12);
    CHECK(rel(q_integral_upper_closed(e), upper_scale * i4_closed({std::atanh(e1), k})) < 1e-12);
  }
}

TEST_CASE("four area routes reproduce the dispatch area") {
  std::mt19937_64 g(35);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 20; ++i) {
    const geometry::SemiAxes s{u(g), u(g), u(g)};
    const double want = geometry::surface_area(s);
    CHECK(rel(area_route_i1(s), want) < 1e-10);
    CHECK(rel(area_route_log(s), want) < 1e-10);
    CHECK(rel(area_route_barred_i1(s), want) < 1e-10);
    CHECK(rel(area_route_arctan(s), want) < 1e-10);
  }
  CHECK_THROWS_AS(area_route_i1({2, 2, 1}), DomainError);
}

TEST_CASE("kernel relations between the barred and sine forms") {
  std::mt19937_64 g(36);
  std::uniform_real_distribution<double> ux(0.0, half_pi), uk(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double xi = ux(g), kb = uk(g);
    if (xi == 0.0 || kb == 0.0) continue;
    CHECK(rel(i2_barred_closed({half_pi - xi, kb}), gr_e_sin_closed({xi, kb})) < 1e-11);
    CHECK(rel(i3_barred_closed({half_pi - xi, kb}), gr_f_sin_closed({xi, kb})) < 1e-11);
  }
}

// Unreduced closed forms in mpmath at 50 digits. The brackets cancel to order
// kbar^2, so small kbar is where a naive evaluation would lose digits.
TEST_CASE("kernel forms stay accurate at small kbar") {
  struct Row {
    double kbar, angle, i2, i3, ge, gf;
  };
  const Row rows[] = {
      {0.001, 0.3, 0.39269937933242455, 0.39269947750732354, 0.3926991767643958, 0.39269927493923407},
      {0.01, 1.2, 0.3927096680008713, 0.39271948618823727, 0.3927277680850487, 0.39273758681544596},
      {0.2, 0.7, 0.40161046508660764, 0.40571071172569784, 0.3998763509458748, 0.4039553363874965},
      {0.45, 1.0, 0.42559160308054494, 0.4494934090347489, 0.45102845758418914, 0.476665940506076},
  };
  for (const Row& r : rows) {
    CAPTURE(r.kbar);
    CHECK(rel(i2_barred_closed({r.angle, r.kbar}), r.i2) < 1e-14);
    CHECK(rel(i3_barred_closed({r.angle, r.kbar}), r.i3) < 1e-14);
    CHECK(rel(gr_e_sin_closed({r.angle, r.kbar}), r.ge) < 1e-14);
    CHECK(rel(gr_f_sin_closed({r.angle, r.kbar}), r.gf) < 1e-14);
  }
  // Both sides of the switch to the series agree.
  for (double angle : {0.2, 0.9, 1.4}) {
    CHECK(rel(i3_barred_closed({angle, 0.4999999}), i3_barred_closed({angle, 0.5000001})) < 1e-6);
    CHECK(rel(gr_e_sin_closed({angle, 0.4999999}), gr_e_sin_closed({angle, 0.5000001})) < 1e-6);
  }
}

}  // TEST_SUITE

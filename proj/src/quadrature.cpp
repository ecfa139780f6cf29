#include "ellint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "ellint/errors.hpp"

namespace ellint::quadrature {
namespace {

using detail::require;

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double half_pi = 1.57079632679489661923132169163975144;

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are
// the 7-point Gauss nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  double resabs;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

double sample(const Function& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NonConvergenceError("integrate: non-finite integrand value at x = " + std::to_string(x),
                              std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::infinity());
  }
  return v;
}

Panel gauss_kronrod(const Function& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = sample(f, center);
  double kronrod = fc * wgk[7];
  double gauss = fc * wg[3];
  double resabs = std::fabs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const double f1 = sample(f, center - dx);
    const double f2 = sample(f, center + dx);
    kronrod += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half), resabs * std::fabs(half)};
}

// Neumaier-compensated sum of panel values and errors in left-to-right order.
void total(std::vector<Panel>& panels, double& value, double& error, double& resabs) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double s = 0.0, comp = 0.0;
  error = 0.0;
  resabs = 0.0;
  for (const Panel& p : panels) {
    const double t = s + p.value;
    comp += std::fabs(s) >= std::fabs(p.value) ? (s - t) + p.value : (p.value - t) + s;
    s = t;
    error += p.error;
    resabs += p.resabs;
  }
  value = s + comp;
}

std::int64_t env_budget(std::int64_t fallback) {
  const char* raw = std::getenv("ELLINT_MAX_EVALS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) return fallback;
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t budget_1d() { return env_budget(default_budget_1d); }
std::int64_t budget_2d() { return env_budget(default_budget_2d); }

QuadratureResult integrate(const Function& f, double lo, double hi, double tol) {
  return integrate(f, lo, hi, tol, budget_1d());
}

QuadratureResult integrate(const Function& f, double lo, double hi, double tol,
                           std::int64_t budget) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "integrate", "finite lo < hi");
  require(tol > 0.0, "integrate", "tol > 0");
  require(budget >= 15, "integrate", "evaluation budget >= 15");

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> closed;  // panels too narrow to split further
  Panel first = gauss_kronrod(f, lo, hi);
  std::int64_t evaluations = 15;
  double value = first.value;
  double error = first.error;
  double resabs = first.resabs;
  open.push(first);
  const double abs_floor = 1e-15 * (hi - lo);

  auto target = [&] {
    return std::max({tol * std::fabs(value), abs_floor, 50.0 * eps * resabs});
  };

  while (error > target()) {
    if (open.empty()) break;
    if (evaluations + 30 > budget) {
      std::vector<Panel> all = closed;
      while (!open.empty()) {
        all.push_back(open.top());
        open.pop();
      }
      total(all, value, error, resabs);
      throw NonConvergenceError("integrate: evaluation budget of " + std::to_string(budget) +
                                    " exhausted",
                                value, error);
    }
    Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      closed.push_back(worst);
      continue;
    }
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    open.push(left);
    open.push(right);
  }

  std::vector<Panel> all = std::move(closed);
  while (!open.empty()) {
    all.push_back(open.top());
    open.pop();
  }
  total(all, value, error, resabs);
  if (error > target()) {
    throw NonConvergenceError("integrate: tolerance not reachable", value, error);
  }
  return {value, error, evaluations};
}

QuadratureResult integrate_singular_pair(const Function& g, double lo, double hi, double tol) {
  require(lo > 0.0 && lo < hi && std::isfinite(hi), "integrate_singular_pair", "0 < lo < hi");
  const double span = (hi - lo) * (hi + lo);
  const double lo2 = lo * lo;
  auto h = [&](double t) {
    const double s = std::sin(t);
    const double q = std::sqrt(lo2 + span * s * s);
    return g(q) / q;
  };
  return integrate(h, 0.0, half_pi, tol);
}

QuadratureResult integrate_singular_upper(const Function& g, double hi, double tol) {
  require(hi > 0.0 && std::isfinite(hi), "integrate_singular_upper", "hi > 0");
  auto h = [&](double t) { return g(hi * std::sin(t)); };
  return integrate(h, 0.0, half_pi, tol);
}

QuadratureResult integrate_kind(const Function& g, double lo, double hi, SingularityKind kind,
                                double tol) {
  switch (kind) {
    case SingularityKind::inverse_sqrt_both:
      return integrate_singular_pair(g, lo, hi, tol);
    case SingularityKind::inverse_sqrt_upper:
      require(lo == 0.0, "integrate_kind", "lo = 0 for an upper-endpoint kernel");
      return integrate_singular_upper(g, hi, tol);
    case SingularityKind::none:
      break;
  }
  return integrate(g, lo, hi, tol);
}

QuadratureResult integrate_2d(const Function2& f, double x0, double x1, double y0, double y1,
                              double tol) {
  require(x0 < x1 && y0 < y1, "integrate_2d", "x0 < x1 and y0 < y1");
  require(tol > 0.0, "integrate_2d", "tol > 0");
  const std::int64_t budget = budget_2d();
  std::int64_t used = 0;
  double worst_inner = 0.0;
  auto outer = [&](double x) {
    const std::int64_t remaining = budget - used;
    if (remaining < 15) {
      throw NonConvergenceError("integrate_2d: evaluation budget of " + std::to_string(budget) +
                                    " exhausted",
                                std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::infinity());
    }
    QuadratureResult inner =
        integrate([&](double y) { return f(x, y); }, y0, y1, 0.1 * tol, remaining);
    used += inner.evaluations;
    if (inner.value != 0.0) {
      worst_inner = std::max(worst_inner, inner.error_estimate / std::fabs(inner.value));
    }
    return inner.value;
  };
  QuadratureResult r = integrate(outer, x0, x1, tol, budget);
  r.error_estimate += worst_inner * std::fabs(r.value);
  r.evaluations = used;
  return r;
}

QuadratureResult surface_area_quadrature(double a, double b, double c, double tol) {
  require(a > 0.0 && b > 0.0 && c > 0.0 && std::isfinite(a) && std::isfinite(b) &&
              std::isfinite(c),
          "surface_area_quadrature", "positive finite axes");
  const double bc2 = b * b * c * c;
  const double ac2 = a * a * c * c;
  const double ab2 = a * a * b * b;
  auto f = [=](double t, double p) {
    const double st = std::sin(t), ct = std::cos(t);
    const double sp = std::sin(p), cp = std::cos(p);
    return st * std::sqrt(st * st * (bc2 * cp * cp + ac2 * sp * sp) + ab2 * ct * ct);
  };
  QuadratureResult r = integrate_2d(f, 0.0, half_pi, 0.0, half_pi, tol);
  r.value *= 8.0;
  r.error_estimate *= 8.0;
  return r;
}

}  // namespace ellint::quadrature

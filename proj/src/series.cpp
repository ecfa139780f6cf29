#include "ellint/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ellint/elliptic.hpp"
#include "ellint/errors.hpp"

namespace ellint::series {
namespace {

using detail::require;
using elliptic::pi;

void check_pair(double e1, double e2, const char* fn) {
  require(e1 < 1.0 && e1 > e2 && e2 > 0.0, fn, "1 > e1 > e2 > 0");
}

void check_m(int m_max, const char* fn) { require(m_max >= 0, fn, "m_max >= 0"); }

// Neumaier compensated accumulator.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct ARecurrence {
  double s, p;
  double next(int n, double t1, double t0) const {
    const double dn = n;
    return (s * (2 * dn + 3) * (2 * dn + 3) * t1 - 2 * p * (dn + 1) * (2 * dn + 1) * t0) /
           (2 * (dn + 2) * (2 * dn + 5));
  }
};

struct OmegaRecurrence {
  double s, p;
  double next(int n, double t1, double t0) const {
    const double dn = n;
    return (s * (2 * dn + 1) * (2 * dn + 3) * t1 -
            2 * p * (dn + 1) * std::fabs(2 * dn - 1) * t0) /
           (2 * (dn + 2) * (2 * dn + 3));
  }
};

template <class R>
std::vector<double> generate(const R& r, double t0, double t1, int m_max) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  out.push_back(t0);
  if (m_max >= 1) out.push_back(t1);
  for (int n = 0; n + 2 <= m_max; ++n) {
    out.push_back(r.next(n, out[n + 1], out[n]));
  }
  return out;
}

// Sums t_0 + t_1 + ... until the next term is below tol relative to
// |partial - offset| and below 1e-18 absolutely.
template <class R>
SeriesSum sum_series(const R& r, double t0, double t1, double offset, double e1, double tol,
                     std::int64_t max_terms, const char* fn) {
  require(tol > 0.0, fn, "tol > 0");
  require(max_terms >= 1, fn, "max_terms >= 1");
  Accumulator acc;
  acc.add(t0 - offset);
  double prev = t0, cur = t1;
  double last = t0;
  std::int64_t used = 1;
  for (int n = 0;; ++n) {
    const double next = cur;
    const double ref = std::fabs(acc.value());
    if (std::fabs(next) < tol * ref && std::fabs(next) < 1e-18) {
      const double tail = std::fabs(next) / ((1.0 - e1) * (1.0 + e1));
      return {pi * acc.value(), used, pi * std::max(std::fabs(last), tail)};
    }
    if (used >= max_terms) {
      const double tail = std::fabs(next) / ((1.0 - e1) * (1.0 + e1));
      throw NonConvergenceError(std::string(fn) + ": term cap of " + std::to_string(max_terms) +
                                    " reached",
                                pi * acc.value(), pi * std::max(std::fabs(last), tail));
    }
    acc.add(next);
    last = next;
    ++used;
    const double following = r.next(n, cur, prev);
    prev = cur;
    cur = following;
  }
}

}  // namespace

std::string_view to_string(CoefficientKind k) {
  switch (k) {
    case CoefficientKind::A: return "A";
    case CoefficientKind::OMEGA: return "OMEGA";
    case CoefficientKind::THETA: return "THETA";
    case CoefficientKind::PSI: return "PSI";
  }
  return "unknown";
}

SeriesCoefficients a_coefficients(double e1, double e2, int m_max) {
  check_pair(e1, e2, "a_coefficients");
  check_m(m_max, "a_coefficients");
  const double s = e1 * e1 + e2 * e2, p = e1 * e1 * e2 * e2;
  return {CoefficientKind::A, e1, e2, generate(ARecurrence{s, p}, 1.0, s / 6.0, m_max)};
}

SeriesCoefficients omega_coefficients(double e1, double e2, int m_max) {
  check_pair(e1, e2, "omega_coefficients");
  check_m(m_max, "omega_coefficients");
  const double s = e1 * e1 + e2 * e2, p = e1 * e1 * e2 * e2;
  return {CoefficientKind::OMEGA, e1, e2, generate(OmegaRecurrence{s, p}, 1.0, s / 2.0, m_max)};
}

SeriesCoefficients theta_terms(double e1, double e2, int m_max) {
  check_pair(e1, e2, "theta_terms");
  check_m(m_max, "theta_terms");
  // With a = (e1^2 + e2^2)/2 and d = (e1^2 - e2^2)/2,
  //   sqrt(1 - e1^2 t) sqrt(1 - e2^2 t) = sum_n b_n d^2n t^2n (1 - a t)^(1-2n),
  // b_n the coefficients of sqrt(1 - x). For m >= 2 this gives
  //   Theta_{2m+1} = sum_{n=1}^{m/2} -b_n C(m-2, 2n-2) d^2n a^(m-2n),
  // a sum of positive terms, free of the cancellation of the direct Cauchy
  // product when e1 and e2 are close.
  const double a = (e1 * e1 + e2 * e2) / 2.0;
  const double d2 = ((e1 - e2) * (e1 + e2) / 2.0) * ((e1 - e2) * (e1 + e2) / 2.0);
  std::vector<double> terms(static_cast<std::size_t>(m_max) + 1, 0.0);
  if (m_max >= 1) terms[1] = a;
  for (int m = 2; m <= m_max; ++m) {
    Accumulator acc;
    double t = 0.5 * d2 * std::pow(a, m - 2);  // n = 1
    for (int n = 1; 2 * n <= m; ++n) {
      acc.add(t);
      // -b_{n+1} / -b_n = (n - 1/2) / (n + 1); C(m-2, 2n) / C(m-2, 2n-2).
      const double binom =
          static_cast<double>(m - 2 * n) * (m - 2 * n - 1) / ((2.0 * n) * (2.0 * n - 1));
      t *= (n - 0.5) / (n + 1.0) * binom * d2 / (a * a);
    }
    terms[m] = acc.value();
  }
  return {CoefficientKind::THETA, e1, e2, std::move(terms)};
}

SeriesCoefficients psi_terms(double e1, double e2, int m_max) {
  check_pair(e1, e2, "psi_terms");
  check_m(m_max, "psi_terms");
  // Psi_{2m+1} = e1^2 e2^2 / (2m - 1) sum_{i+j=m-2} c_i c_j e1^2i e2^2j with
  // c_i = C(2i, i) / 4^i: the expansion of e1 k^2 D(asin e1, k) obtained from
  // sin t = e1 z and the binomial series of both radicals.
  const double x1 = e1 * e1, x2 = e2 * e2;
  std::vector<double> c(static_cast<std::size_t>(std::max(m_max - 1, 1)));
  c[0] = 1.0;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = c[i - 1] * (2.0 * i - 1.0) / (2.0 * i);
  std::vector<double> terms(static_cast<std::size_t>(m_max) + 1, 0.0);
  for (int m = 2; m <= m_max; ++m) {
    Accumulator acc;
    for (int i = 0; i <= m - 2; ++i) {
      acc.add(c[i] * c[m - 2 - i] * std::pow(x1, i) * std::pow(x2, m - 2 - i));
    }
    terms[m] = x1 * x2 * acc.value() / (2.0 * m - 1.0);
  }
  return {CoefficientKind::PSI, e1, e2, std::move(terms)};
}

SeriesSum sigma1_sum(double e1, double e2, double tol, std::int64_t max_terms) {
  check_pair(e1, e2, "sigma1_sum");
  const double s = e1 * e1 + e2 * e2, p = e1 * e1 * e2 * e2;
  return sum_series(ARecurrence{s, p}, 1.0, s / 6.0, 0.0, e1, tol, max_terms, "sigma1_sum");
}

SeriesSum sigma2_sum(double e1, double e2, double tol, std::int64_t max_terms) {
  check_pair(e1, e2, "sigma2_sum");
  const double s = e1 * e1 + e2 * e2, p = e1 * e1 * e2 * e2;
  return sum_series(OmegaRecurrence{s, p}, 1.0, s / 2.0, 1.0, e1, tol, max_terms, "sigma2_sum");
}

double sigma1_reference(double e1, double e2) {
  check_pair(e1, e2, "sigma1_reference");
  return pi / e1 * elliptic::incomplete_f(std::asin(e1), e2 / e1);
}

double sigma2_reference(double e1, double e2) {
  check_pair(e1, e2, "sigma2_reference");
  const double k = e2 / e1;
  const double w = std::sqrt((1.0 - e1) * (1.0 + e1) * (1.0 - e2) * (1.0 + e2));
  return pi * (1.0 - w) + pi * e1 * k * k * elliptic::incomplete_d(std::asin(e1), k);
}

double f_maclaurin_derivative(int m, double e1, double e2) {
  check_pair(e1, e2, "f_maclaurin_derivative");
  require(m >= 0, "f_maclaurin_derivative", "m >= 0");
  // a_n = A_{2n+1} / e1^{2n} obeys the A recurrence with s -> 1 + k^2 and
  // p -> k^2.
  const double k2 = (e2 / e1) * (e2 / e1);
  const ARecurrence r{1.0 + k2, k2};
  double prev = 1.0, cur = (1.0 + k2) / 6.0;
  double a = prev;
  if (m >= 1) a = cur;
  for (int n = 0; n + 2 <= m; ++n) {
    const double next = r.next(n, cur, prev);
    prev = cur;
    cur = next;
    a = cur;
  }
  double result = a;
  for (int j = 2; j <= 2 * m + 1; ++j) {
    result *= j;
    if (!std::isfinite(result)) {
      throw DomainError("f_maclaurin_derivative: (2m+1)! A_{2m+1} overflows for m = " +
                        std::to_string(m));
    }
  }
  return result;
}

}  // namespace ellint::series

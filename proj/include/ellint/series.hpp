#ifndef ELLINT_SERIES_HPP
#define ELLINT_SERIES_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace ellint::series {

enum class CoefficientKind { A, OMEGA, THETA, PSI };

std::string_view to_string(CoefficientKind k);

// terms[m] holds the coefficient of index 2m+1 (A_1, A_3, A_5, ...).
struct SeriesCoefficients {
  CoefficientKind kind;
  double e1;
  double e2;
  std::vector<double> terms;
};

struct SeriesSum {
  double value;
  std::int64_t terms_used;
  double truncation_estimate;
};

inline constexpr std::int64_t default_max_terms = 100000;

// Recurrences with s = e1^2 + e2^2 and p = e1^2 e2^2:
//   A_1 = 1, A_3 = s/6,
//   A_{2n+5} = [s (2n+3)^2 A_{2n+3} - 2p (n+1)(2n+1) A_{2n+1}] / (2(n+2)(2n+5))
//   O_1 = 1, O_3 = s/2,
//   O_{2n+5} = [s (2n+1)(2n+3) O_{2n+3} - 2p (n+1)|2n-1| O_{2n+1}] / (2(n+2)(2n+3))
// All require 1 > e1 > e2 > 0 and m_max >= 0; the result has m_max + 1 terms.
SeriesCoefficients a_coefficients(double e1, double e2, int m_max);
SeriesCoefficients omega_coefficients(double e1, double e2, int m_max);

// Theta_{2m+1}: the degree-2m part of 1 - sqrt(1 - e1^2) sqrt(1 - e2^2) as a
// Cauchy product of the two binomial series; Theta_1 = 0.
SeriesCoefficients theta_terms(double e1, double e2, int m_max);
// Psi_{2m+1} = Omega_{2m+1} - Theta_{2m+1}, the degree-2m part of
// e1 k^2 D(asin e1, k); Psi_1 = Psi_3 = 0. Evaluated directly, not as a
// difference.
SeriesCoefficients psi_terms(double e1, double e2, int m_max);

// pi * sum A_{2m+1}, equal to (pi/e1) F(asin e1, e2/e1).
SeriesSum sigma1_sum(double e1, double e2, double tol,
                     std::int64_t max_terms = default_max_terms);
// pi * (sum Omega_{2m+1} - 1).
SeriesSum sigma2_sum(double e1, double e2, double tol,
                     std::int64_t max_terms = default_max_terms);

// Reference values the two sums converge to.
double sigma1_reference(double e1, double e2);
double sigma2_reference(double e1, double e2);

// (2m+1)! A_{2m+1} / e1^{2m}: the (2m+1)-th derivative of z -> F(asin z, e2/e1)
// at z = 0.
double f_maclaurin_derivative(int m, double e1, double e2);

}  // namespace ellint::series

#endif  // ELLINT_SERIES_HPP

#ifndef ELLINT_ERRORS_HPP
#define ELLINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellint {

// Argument outside the domain of the operation. The message names the
// violated constraint.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested value is infinite (e.g. K(1), F(pi/2, 1)).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An integrand kernel vanishes inside the integration interval.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative method (series, adaptive quadrature) exhausted its budget
// before reaching the requested tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double best, double error_estimate)
      : std::runtime_error(what), best_(best), error_estimate_(error_estimate) {}

  double best() const noexcept { return best_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_;
  double error_estimate_;
};

namespace detail {

[[noreturn]] inline void domain_fail(const char* function, const std::string& constraint) {
  throw DomainError(std::string(function) + ": domain error, requires " + constraint);
}

inline void require(bool ok, const char* function, const char* constraint) {
  if (!ok) domain_fail(function, constraint);
}

}  // namespace detail
}  // namespace ellint

#endif  // ELLINT_ERRORS_HPP

#include "mrbound/special_functions.hpp"

#include <cmath>
#include <string>

#include "mrbound/errors.hpp"

namespace mrbound {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma needs a positive finite argument, got " + std::to_string(x));
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_pochhammer(double x, int k) {
  if (k < 0) {
    throw DomainError("Pochhammer index must be non-negative");
  }
  if (k == 0) {
    return 0.0;
  }
  return log_gamma(x + k) - log_gamma(x);
}

double pochhammer(double x, int k) {
  if (k < 0) {
    throw DomainError("Pochhammer index must be non-negative");
  }
  double out = 1.0;
  for (int i = 0; i < k; ++i) {
    out *= x + i;
  }
  return out;
}

double hyp2f1_terminating(int n, double b, double c, double z) {
  if (n < 0) {
    throw DomainError("terminating 2F1 needs n >= 0");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const double ck = c + k;
    if (ck == 0.0) {
      throw PoleError("2F1 lower parameter c = " + std::to_string(c) +
                      " hits a pole before the series terminates");
    }
    term *= (k - n) * (b + k) / (ck * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

double jacobi_p(int n, double nu, double mu, double x) {
  if (n < 0) {
    throw DomainError("Jacobi degree must be non-negative");
  }
  if (n == 0) {
    return 1.0;
  }
  const double s = nu + mu;
  double p_prev = 1.0;
  double p = 0.5 * ((s + 2.0) * x + nu - mu);
  for (int k = 1; k < n; ++k) {
    const double two_k_s = 2.0 * k + s;
    const double a1 = 2.0 * (k + 1) * (k + s + 1.0) * two_k_s;
    const double a2 = (two_k_s + 1.0) * (nu * nu - mu * mu);
    const double a3 = (two_k_s + 1.0) * (two_k_s + 2.0) * two_k_s;
    const double a4 = 2.0 * (k + nu) * (k + mu) * (two_k_s + 2.0);
    const double p_next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

}  // namespace mrbound

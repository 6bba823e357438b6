#pragma once

#include <functional>
#include <vector>

namespace mrbound {

struct QuadratureRule {
  std::vector<double> nodes;    ///< on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on the Legendre recurrence.
QuadratureRule gauss_legendre(int n);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive composite Gauss-Legendre: each panel is compared against its two
/// halves and bisected until the local change meets the tolerance.
QuadratureResult integrate_gauss_legendre(const std::function<double(double)>& f, double a,
                                          double b, double rel_tol = 1e-12, int order = 20,
                                          int max_depth = 60);

/// Integrand that also receives the exact distances x - a and b - x, so
/// endpoint singularities such as (b - x)^{-1/2} can be evaluated without
/// cancellation.
using EndpointIntegrand = std::function<double(double x, double from_a, double to_b)>;

/// Double-exponential (tanh-sinh) quadrature on a finite interval. Handles
/// integrable endpoint singularities; f is never evaluated at a or b.
QuadratureResult integrate_tanh_sinh(const EndpointIntegrand& f, double a, double b,
                                     double rel_tol = 1e-13);

}  // namespace mrbound

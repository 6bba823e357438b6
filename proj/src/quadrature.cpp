#include "mrbound/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "mrbound/errors.hpp"

namespace mrbound {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) {
    throw DomainError("Gauss-Legendre order must be positive");
  }
  QuadratureRule rule;
  if (n == 1) {
    rule.nodes = {0.0};
    rule.weights = {2.0};
    return rule;
  }
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  }
  return rule;
}

namespace {

struct PanelIntegrator {
  const std::function<double(double)>& f;
  QuadratureRule rule;
  int max_depth;
  int evaluations = 0;
  double error = 0.0;

  double panel(double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    evaluations += static_cast<int>(rule.nodes.size());
    return sum * half;
  }

  double refine(double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(a, mid);
    const double right = panel(mid, b);
    const double halves = left + right;
    const double diff = std::abs(halves - whole);
    if (diff <= tol || depth >= max_depth || mid <= a || mid >= b) {
      error += diff;
      return halves;
    }
    const double sub_tol = tol / std::numbers::sqrt2;
    return refine(a, mid, left, sub_tol, depth + 1) + refine(mid, b, right, sub_tol, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate_gauss_legendre(const std::function<double(double)>& f, double a,
                                          double b, double rel_tol, int order, int max_depth) {
  if (!(b > a)) {
    throw DomainError("integration interval must satisfy a < b");
  }
  PanelIntegrator integ{f, gauss_legendre(order), max_depth};
  // Coarse estimate over a few panels sets the absolute tolerance scale.
  constexpr int kStartPanels = 8;
  const double width = (b - a) / kStartPanels;
  double scale = 0.0;
  std::vector<double> coarse(kStartPanels);
  for (int i = 0; i < kStartPanels; ++i) {
    coarse[static_cast<std::size_t>(i)] = integ.panel(a + i * width, a + (i + 1) * width);
    scale += std::abs(coarse[static_cast<std::size_t>(i)]);
  }
  const double tol = rel_tol * std::max(scale, 1e-300) / std::sqrt(double(kStartPanels));
  double total = 0.0;
  for (int i = 0; i < kStartPanels; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == kStartPanels ? b : a + (i + 1) * width;
    total += integ.refine(lo, hi, coarse[static_cast<std::size_t>(i)], tol, 0);
  }
  return {total, integ.error, integ.evaluations};
}

QuadratureResult integrate_tanh_sinh(const EndpointIntegrand& f, double a, double b,
                                     double rel_tol) {
  if (!(b > a)) {
    throw DomainError("integration interval must satisfy a < b");
  }
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr int kMaxLevel = 14;
  constexpr double kTMax = 6.5;
  const double half = 0.5 * (b - a);
  int evaluations = 0;

  // Sum over abscissae t = k h for the given step and parity.
  auto node_sum = [&](double h, int start, int stride) {
    double sum = 0.0;
    for (int k = start;; k += stride) {
      const double t = k * h;
      if (t > kTMax) {
        break;
      }
      const double u = kHalfPi * std::sinh(t);
      const double cu = std::cosh(u);
      // 1 - tanh(u) = 2 / (e^{2u} + 1), computed without cancellation.
      const double one_minus = 2.0 / (std::exp(2.0 * u) + 1.0);
      const double weight = kHalfPi * std::cosh(t) / (cu * cu);
      const double dist = half * one_minus;
      if (!(dist > 0.0)) {
        break;
      }
      // +t: near b, -t: near a
      const double xr = b - dist;
      const double xl = a + dist;
      double term = weight * f(xr, b - a - dist, dist);
      ++evaluations;
      if (k != 0) {
        term += weight * f(xl, dist, b - a - dist);
        ++evaluations;
      }
      sum += term;
      if (weight < 1e-300) {
        break;
      }
    }
    return sum;
  };

  double h = 1.0;
  double sum = node_sum(h, 0, 1);
  double estimate = half * h * sum;
  double error = std::abs(estimate);
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    sum += node_sum(h, 1, 2);
    const double next = half * h * sum;
    error = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && error <= rel_tol * std::abs(estimate)) {
      break;
    }
  }
  return {estimate, error, evaluations};
}

}  // namespace mrbound

#include "mrbound/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mrbound/errors.hpp"
#include "mrbound/spectrum.hpp"
#include "mrbound/special_functions.hpp"

namespace mrbound {

namespace {

double log_factorial(int n) { return log_gamma(n + 1.0); }

void require_bound(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw UnboundStateError("wave function requested for an unbound level (epsilon = " +
                            std::to_string(epsilon) + ")");
  }
}

// e^{-eps r/b} (1 - e^{-r/b})^{nu}
double envelope(const WavefunctionSpec& spec, double r) {
  const double x = r / spec.params.b;
  return std::exp(-spec.epsilon * x) * std::pow(-std::expm1(-x), spec.nu_l);
}

void require_radius(double r) {
  if (!(r >= 0.0)) {
    throw DomainError("radial coordinate must be non-negative");
  }
}

// Integrand of int_0^inf g(r) dr after r = -b ln((1 - x)/2).
template <typename G>
double mapped_integrand(double b, double x, G&& g) {
  const double one_minus = 1.0 - x;
  if (!(one_minus > 0.0)) {
    return 0.0;
  }
  const double r = -b * std::log1p(-0.5 * (1.0 + x));
  return g(r) * b / one_minus;
}

}  // namespace

double normalization_constant(double epsilon, double nu_l, int n, double b) {
  require_bound(epsilon);
  if (n < 0) {
    throw DomainError("radial quantum number must be non-negative");
  }
  if (!(nu_l > 0.0)) {
    throw DomainError("nu_l must be positive, got " + std::to_string(nu_l));
  }
  if (!(b > 0.0)) {
    throw DomainError("range parameter b must be positive");
  }
  const double two_eps = 2.0 * epsilon;
  const double log_ratio = std::log(two_eps * (n + epsilon + nu_l) / (b * (n + nu_l)));
  const double log_gammas = log_gamma(n + two_eps + 1.0) + log_gamma(n + two_eps + 2.0 * nu_l) -
                            log_factorial(n) - log_gamma(n + 2.0 * nu_l);
  return std::exp(0.5 * (log_ratio + log_gammas) - log_gamma(two_eps + 1.0));
}

double s_wave_normalization_constant(const PotentialParams& p, int n) {
  if (n < 0) {
    throw DomainError("radial quantum number must be non-negative");
  }
  const double shift = p.alpha < 0.5 ? 1.0 - p.alpha : p.alpha;
  const double k = n + shift;
  const double epsilon = 0.5 * ((p.A + p.alpha_term()) / k - k);
  return normalization_constant(epsilon, shift, n, p.b);
}

WavefunctionSpec make_wavefunction(const PotentialParams& p, const ApproxScheme& s,
                                   const QuantumState& q) {
  p.validate();
  const SpectrumIntermediates mid = spectrum_intermediates(p, s, q);
  WavefunctionSpec spec;
  spec.params = p;
  spec.scheme = s;
  spec.state = q;
  spec.epsilon = epsilon_nl(p, s, q);
  spec.nu_l = mid.nu_l;
  spec.norm_constant = normalization_constant(spec.epsilon, spec.nu_l, q.n, p.b);
  return spec;
}

double radial_wavefunction(const WavefunctionSpec& spec, double r) {
  require_radius(r);
  if (r == 0.0) {
    return 0.0;
  }
  const int n = spec.state.n;
  const double x = r / spec.params.b;
  const double z = std::exp(-x);
  const double upper = n + 2.0 * (spec.epsilon + spec.nu_l);
  const double lower = 2.0 * spec.epsilon + 1.0;
  double series = 0.0;
  if (z <= 0.5) {
    series = hyp2f1_terminating(n, upper, lower, z);
  } else {
    // Near the origin the series in z cancels badly; the terminating
    // connection formula gives a series in 1 - z with lower parameter 2 nu.
    double ratio = 1.0;
    for (int k = 0; k < n; ++k) {
      ratio *= (lower - upper + k) / (lower + k);
    }
    series = ratio * hyp2f1_terminating(n, upper, upper - lower - n + 1.0, -std::expm1(-x));
  }
  return spec.norm_constant * envelope(spec, r) * series;
}

double radial_wavefunction_jacobi(const WavefunctionSpec& spec, double r) {
  require_radius(r);
  if (r == 0.0) {
    return 0.0;
  }
  const int n = spec.state.n;
  const double two_eps = 2.0 * spec.epsilon;
  const double log_prefactor =
      log_factorial(n) + log_gamma(two_eps + 1.0) - log_gamma(n + two_eps + 1.0);
  const double x = 1.0 - 2.0 * std::exp(-r / spec.params.b);
  const double poly = jacobi_p(n, two_eps, 2.0 * spec.nu_l - 1.0, x);
  return spec.norm_constant * std::exp(log_prefactor) * envelope(spec, r) * poly;
}

QuadratureResult norm_integral(const WavefunctionSpec& spec, double rel_tol) {
  const double b = spec.params.b;
  return integrate_gauss_legendre(
      [&](double x) {
        return mapped_integrand(b, x, [&](double r) {
          const double u = radial_wavefunction(spec, r);
          return u * u;
        });
      },
      -1.0, 1.0, rel_tol);
}

QuadratureResult overlap_integral(const WavefunctionSpec& a, const WavefunctionSpec& b,
                                  double rel_tol) {
  if (a.params.b != b.params.b) {
    throw DomainError("overlap needs wave functions with the same range parameter");
  }
  const double range = a.params.b;
  return integrate_gauss_legendre(
      [&](double x) {
        return mapped_integrand(range, x, [&](double r) {
          return radial_wavefunction(a, r) * radial_wavefunction(b, r);
        });
      },
      -1.0, 1.0, rel_tol);
}

double jacobi_integral_reduced_weight(int n, double nu, double mu) {
  if (!(nu > 0.0) || !(mu > -1.0)) {
    throw DomainError("reduced-weight Jacobi integral needs nu > 0 and mu > -1");
  }
  const double log_value = (nu + mu) * std::numbers::ln2 + log_gamma(n + nu + 1.0) +
                           log_gamma(n + mu + 1.0) - log_factorial(n) -
                           log_gamma(n + nu + mu + 1.0);
  return std::exp(log_value) / nu;
}

double jacobi_integral_full_weight(int n, double nu, double mu) {
  if (!(nu > -1.0) || !(mu > -1.0)) {
    throw DomainError("Jacobi integral needs nu, mu > -1");
  }
  const double log_value = (nu + mu + 1.0) * std::numbers::ln2 + log_gamma(n + nu + 1.0) +
                           log_gamma(n + mu + 1.0) - log_factorial(n) -
                           log_gamma(n + nu + mu + 1.0);
  return std::exp(log_value) / (2.0 * n + nu + mu + 1.0);
}

int count_sign_changes(std::span<const double> values) {
  int changes = 0;
  double last = 0.0;
  for (double v : values) {
    if (v == 0.0 || !std::isfinite(v)) {
      continue;
    }
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) {
      ++changes;
    }
    last = v;
  }
  return changes;
}

std::vector<double> sample_wavefunction(const WavefunctionSpec& spec, std::span<const double> r) {
  std::vector<double> out;
  out.reserve(r.size());
  for (double ri : r) {
    out.push_back(radial_wavefunction(spec, ri));
  }
  return out;
}

}  // namespace mrbound

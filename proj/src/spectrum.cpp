#include "mrbound/spectrum.hpp"

#include <cmath>
#include <string>

#include "mrbound/errors.hpp"

namespace mrbound {

namespace {

void require_state(const QuantumState& q) {
  if (q.n < 0 || q.l < 0) {
    throw DomainError("quantum numbers must be non-negative");
  }
}

double a_parameter(double alpha, const ApproxScheme& s, const QuantumState& q) {
  const double t = 1.0 - 2.0 * alpha;
  return std::sqrt(t * t + 4.0 * q.l_factor() * s.d2);
}

SpectrumResult from_epsilon(double epsilon, double delta_E_l) {
  SpectrumResult r;
  r.epsilon = epsilon;
  if (epsilon > 0.0) {
    r.energy = delta_E_l - epsilon * epsilon;
  }
  return r;
}

}  // namespace

SpectrumIntermediates spectrum_intermediates(const PotentialParams& p, const ApproxScheme& s,
                                             const QuantumState& q) {
  require_state(q);
  const double lf = q.l_factor();
  SpectrumIntermediates out;
  out.a = a_parameter(p.alpha, s, q);
  out.beta1 = p.A - lf * s.d1;
  out.beta2 = p.alpha_term() + lf * s.d2;
  out.delta_E_l = lf * s.d0;
  out.nu_l = 0.5 * (1.0 + out.a);
  return out;
}

double epsilon_nl(const PotentialParams& p, const ApproxScheme& s, const QuantumState& q) {
  require_state(q);
  const double k = 2.0 * q.n + 1.0 + a_parameter(p.alpha, s, q);
  const double numerator = p.A + p.alpha_term() + q.l_factor() * (s.d2 - s.d1);
  return numerator / k - k / 4.0;
}

SpectrumResult energy(const PotentialParams& p, const ApproxScheme& s, const QuantumState& q) {
  return from_epsilon(epsilon_nl(p, s, q), q.l_factor() * s.d0);
}

double binding_energy_atomic(const SpectrumResult& r, double b) {
  if (!r.bound()) {
    throw UnboundStateError("no bound state: epsilon = " + std::to_string(r.epsilon));
  }
  return -*r.energy / (2.0 * b * b);
}

double critical_coupling(double alpha, const ApproxScheme& s, const QuantumState& q) {
  require_state(q);
  const double k = 2.0 * q.n + 1.0 + a_parameter(alpha, s, q);
  return 0.25 * k * k - alpha * (alpha - 1.0) - q.l_factor() * (s.d2 - s.d1);
}

int n_max(const PotentialParams& p) {
  const double radicand = p.A + p.alpha_term();
  if (radicand < 0.0) {
    return -1;
  }
  const double root = std::sqrt(radicand);
  const double top = p.alpha < 0.5 ? root + p.alpha - 1.0 : root - p.alpha;
  const double n = std::floor(top);
  return n < 0.0 ? -1 : static_cast<int>(n);
}

SpectrumResult s_wave_energy(const PotentialParams& p, int n) {
  if (n < 0) {
    throw DomainError("radial quantum number must be non-negative");
  }
  if (p.alpha == 0.5) {
    return energy(p, ApproxScheme::usual(), {n, 0});
  }
  const double k = p.alpha < 0.5 ? n - p.alpha + 1.0 : n + p.alpha;
  const double epsilon = 0.5 * ((p.A + p.alpha_term()) / k - k);
  return from_epsilon(epsilon, 0.0);
}

double hulthen_coupling(const HulthenParams& h) {
  if (!(h.delta > 0.0) || !(h.mu > 0.0)) {
    throw DomainError("Hulthen screening and mass must be positive");
  }
  return 2.0 * h.mu * h.ze2 / h.delta;
}

SpectrumResult hulthen_energy(const HulthenParams& h, const ApproxScheme& s,
                              const QuantumState& q) {
  const PotentialParams p{0.0, hulthen_coupling(h), 1.0 / h.delta};
  SpectrumResult r = energy(p, s, q);
  if (r.energy) {
    *r.energy *= h.delta * h.delta / (2.0 * h.mu);
  }
  return r;
}

double hulthen_usual_closed_form(const HulthenParams& h, const QuantumState& q) {
  require_state(q);
  const double big_n = q.n + q.l + 1.0;
  const double bracket = 1.0 / big_n - h.delta * big_n / (2.0 * h.mu * h.ze2);
  return -h.mu * h.ze2 * h.ze2 / 2.0 * bracket * bracket;
}

double hulthen_improved_closed_form(const HulthenParams& h, const QuantumState& q) {
  return hulthen_usual_closed_form(h, q) + q.l_factor() * h.delta * h.delta / (24.0 * h.mu);
}

double coulomb_epsilon0(double Z, double mu) { return 0.5 * Z * Z * mu; }

double coulomb_limit_energy(double Z, double mu, const QuantumState& q) {
  require_state(q);
  const double big_n = q.n + q.l + 1.0;
  return -coulomb_epsilon0(Z, mu) / (big_n * big_n);
}

}  // namespace mrbound

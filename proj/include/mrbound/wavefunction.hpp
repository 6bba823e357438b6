#pragma once

// Normalized radial wave functions
//
//   u_nl(r) = N_nl e^{-eps r/b} (1 - e^{-r/b})^{nu} 2F1(-n, n + 2(eps + nu); 2 eps + 1; e^{-r/b})
//
// and their closed-form normalization constants.

#include <span>
#include <vector>

#include "mrbound/centrifugal.hpp"
#include "mrbound/core_model.hpp"
#include "mrbound/quadrature.hpp"

namespace mrbound {

struct WavefunctionSpec {
  PotentialParams params;
  ApproxScheme scheme;
  QuantumState state;
  double epsilon = 0.0;
  double nu_l = 0.0;
  double norm_constant = 0.0;
};

/// Builds the bound-state wave function for (p, s, q).
/// Throws UnboundStateError when epsilon <= 0 and DomainError when nu_l <= 0.
WavefunctionSpec make_wavefunction(const PotentialParams& p, const ApproxScheme& s,
                                   const QuantumState& q);

/// Closed-form N_nl from epsilon, nu_l, n and b, evaluated in log space.
///
/// The commonly quoted expression carries eps (n + eps + nu)/(2 b (n + nu))
/// under the square root; integrating u^2 with dr = b dx/(1 - x) gives
/// 2 eps (n + eps + nu)/(b (n + nu)) instead, i.e. twice the quoted constant.
/// This function returns the constant that makes int_0^inf u^2 dr = 1.
double normalization_constant(double epsilon, double nu_l, int n, double b);

/// s-wave constant from the alpha-branch closed forms: nu = 1 - alpha with
/// eps_n = [(A + alpha(alpha-1))/(n - alpha + 1) - (n - alpha + 1)]/2 for alpha < 1/2,
/// nu = alpha with (n + alpha) for alpha > 1/2. alpha = 1/2 uses nu = 1/2.
double s_wave_normalization_constant(const PotentialParams& p, int n);

/// u_nl(r) through the terminating hypergeometric series. Throws DomainError for r < 0.
double radial_wavefunction(const WavefunctionSpec& spec, double r);

/// Same function through P_n^{(2 eps, 2 nu - 1)}(1 - 2 e^{-r/b}).
double radial_wavefunction_jacobi(const WavefunctionSpec& spec, double r);

/// int_0^inf u^2 dr with x = 1 - 2 e^{-r/b} and adaptive Gauss-Legendre on (-1, 1).
QuadratureResult norm_integral(const WavefunctionSpec& spec, double rel_tol = 1e-12);

/// int_0^inf u_a u_b dr by the same quadrature.
QuadratureResult overlap_integral(const WavefunctionSpec& a, const WavefunctionSpec& b,
                                  double rel_tol = 1e-12);

/// Closed form of int_{-1}^{1} (1-x)^{nu-1} (1+x)^{mu} [P_n^{(nu,mu)}(x)]^2 dx,
/// valid for nu > 0, mu > -1.
double jacobi_integral_reduced_weight(int n, double nu, double mu);

/// Closed form of int_{-1}^{1} (1-x)^{nu} (1+x)^{mu} [P_n^{(nu,mu)}(x)]^2 dx,
/// valid for nu, mu > -1.
double jacobi_integral_full_weight(int n, double nu, double mu);

/// Number of strict sign changes in a sampled function; exact zeros are skipped.
int count_sign_changes(std::span<const double> values);

/// u_nl sampled at the given radii.
std::vector<double> sample_wavefunction(const WavefunctionSpec& spec, std::span<const double> r);

}  // namespace mrbound

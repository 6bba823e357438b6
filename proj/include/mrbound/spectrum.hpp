#pragma once

// Closed-form bound-state spectrum of the Manning-Rosen potential under a
// centrifugal approximation scheme, plus the s-wave, Hulthen and Coulomb
// reductions.
//
// Energies are in hbar^2/(2 mu b^2) unless a function says otherwise.

#include <optional>

#include "mrbound/centrifugal.hpp"
#include "mrbound/core_model.hpp"

namespace mrbound {

struct SpectrumIntermediates {
  double a = 0.0;          ///< sqrt((1-2 alpha)^2 + 4 l(l+1) D2)
  double beta1 = 0.0;      ///< A - l(l+1) D1
  double beta2 = 0.0;      ///< alpha(alpha-1) + l(l+1) D2
  double delta_E_l = 0.0;  ///< l(l+1) D0
  double nu_l = 0.0;       ///< (1 + a)/2
};

SpectrumIntermediates spectrum_intermediates(const PotentialParams& p, const ApproxScheme& s,
                                             const QuantumState& q);

/// Outcome of an energy evaluation. Unbound levels (epsilon <= 0) carry no energy.
struct SpectrumResult {
  double epsilon = 0.0;
  std::optional<double> energy;  ///< l(l+1) D0 - epsilon^2 when bound

  [[nodiscard]] bool bound() const { return energy.has_value(); }
};

/// [A + alpha(alpha-1) + l(l+1)(D2-D1)]/(2n+1+a) - (2n+1+a)/4. May be <= 0.
double epsilon_nl(const PotentialParams& p, const ApproxScheme& s, const QuantumState& q);

SpectrumResult energy(const PotentialParams& p, const ApproxScheme& s, const QuantumState& q);

/// -E in Hartree for hbar = mu = 1, i.e. -energy / (2 b^2). Requires a bound result.
double binding_energy_atomic(const SpectrumResult& r, double b);

/// Value of A at which epsilon_nl vanishes for the given coefficients.
double critical_coupling(double alpha, const ApproxScheme& s, const QuantumState& q);

/// Highest s-wave radial quantum number, floor(sqrt(A + alpha(alpha-1)) + alpha - 1)
/// for alpha < 1/2 and floor(sqrt(A + alpha(alpha-1)) - alpha) otherwise.
/// Returns -1 when no s-wave level exists. When the bracket is an exact
/// integer the top level sits at threshold (epsilon = 0).
int n_max(const PotentialParams& p);

/// s-wave closed form with the (n - alpha + 1) or (n + alpha) branch.
/// alpha = 1/2 is handled by the general formula (both branches coincide).
SpectrumResult s_wave_energy(const PotentialParams& p, int n);

/// Hulthen potential -Z e^2 delta e^{-delta r}/(1 - e^{-delta r}) in units
/// with hbar = 1.
struct HulthenParams {
  double ze2 = 1.0;    ///< strength Z e^2
  double delta = 0.0;  ///< screening parameter 1/b
  double mu = 1.0;     ///< reduced mass
};

/// Manning-Rosen coupling equivalent to a Hulthen potential: A = 2 mu Z e^2 / delta.
double hulthen_coupling(const HulthenParams& h);

/// Hulthen level from the general formula with alpha = 0. The energy is in
/// physical units (hbar = 1): delta^2/(2 mu) times the dimensionless value.
SpectrumResult hulthen_energy(const HulthenParams& h, const ApproxScheme& s,
                              const QuantumState& q);

/// -mu (Z e^2)^2/2 [1/(n+l+1) - delta (n+l+1)/(2 mu Z e^2)]^2, the usual-scheme
/// closed form. With l = 0 this is also the s-wave Hulthen spectrum.
double hulthen_usual_closed_form(const HulthenParams& h, const QuantumState& q);

/// Usual closed form shifted by l(l+1) delta^2/(24 mu) (D0 = 1/12).
double hulthen_improved_closed_form(const HulthenParams& h, const QuantumState& q);

/// Hartree energy in eV (CODATA 2018).
inline constexpr double kHartreeEv = 27.211386245988;
/// Hydrogen reduced mass in electron masses, 1/(1 + m_e/m_p).
inline constexpr double kHydrogenReducedMass = 1.0 / (1.0 + 1.0 / 1836.15267343);

/// Rydberg-like scale Z^2 mu/2 (Hartree atomic units, hbar = e = 1).
double coulomb_epsilon0(double Z, double mu);

/// -epsilon0/(n+l+1)^2 in Hartree.
double coulomb_limit_energy(double Z, double mu, const QuantumState& q);

}  // namespace mrbound

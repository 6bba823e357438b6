#pragma once

// Manning-Rosen potential and the exact radial effective potential.
//
// Units: energies are in hbar^2/(2 mu b^2), lengths in the same unit as b.
// Physical conversion lives in molecules.hpp.

#include <string>
#include <string_view>

namespace mrbound {

struct PotentialParams {
  double alpha = 0.0;
  double A = 0.0;
  double b = 1.0;

  /// alpha (alpha - 1); the only way alpha enters the potential.
  [[nodiscard]] double alpha_term() const { return alpha * (alpha - 1.0); }

  /// Coefficients of the alternate form V = -(C e^{r/b} + D)/(e^{r/b} - 1)^2.
  [[nodiscard]] double C() const { return A; }
  [[nodiscard]] double D() const { return -A - alpha_term(); }

  /// Throws DomainError unless b > 0 and all fields are finite.
  void validate() const;
};

/// Radial (n) and orbital (l) quantum numbers.
struct QuantumState {
  int n = 0;
  int l = 0;

  [[nodiscard]] int l_factor() const { return l * (l + 1); }
  /// Spectroscopic label, N = n + l + 1 ("2p" for n = 0, l = 1).
  [[nodiscard]] std::string label() const;

  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

/// Parses "2p", "6g", "1s" ... into (n, l) with n = N - l - 1.
/// Throws DomainError for unknown letters or N <= l.
QuantumState parse_state_label(std::string_view label);

/// Advisory parameter-range flags quoted alongside the approximate
/// solutions. Neither is a precondition.
struct ValidityFlags {
  bool alpha_term_small = false;     ///< |alpha(alpha-1)/A| < 0.1
  bool alpha_term_positive = false;  ///< alpha(alpha-1)/A > 0
};
ValidityFlags validity_flags(const PotentialParams& p);

/// alpha(alpha-1)/(e^{r/b}-1)^2 - A/(e^{r/b}-1).
double potential_value(const PotentialParams& p, double r);

struct PotentialMinimum {
  double r0 = 0.0;
  double value = 0.0;
};

/// Relative minimum r0 = b ln(1 + 2 alpha(alpha-1)/A), V(r0) = -A^2/(4 alpha(alpha-1)).
/// Requires alpha < 0 or alpha > 1 and A > 0, else NoMinimumError.
PotentialMinimum potential_minimum(const PotentialParams& p);

/// d^2V/dr^2 at r0 in units of hbar^2/(2 mu):
/// A^2 [A + 2 alpha(alpha-1)]^2 / (8 b^4 alpha^3 (alpha-1)^3).
double force_constant(const PotentialParams& p);

/// potential_value + l(l+1) (b/r)^2.
double effective_potential(const PotentialParams& p, int l, double r);

}  // namespace mrbound

#pragma once

// Numerical eigensolver for the radial equation with the exact centrifugal
// term, used as an oracle for the closed-form spectrum.
//
// Numerov runs on a uniform grid in t = ln(r/b). With u = e^{t/2} w the
// radial equation becomes w'' = [x^2 (V(x) - E) + (l + 1/2)^2] w, x = r/b,
// which keeps the l(l+1)/r^2 term exact and resolves both the origin and the
// long exponential tail with a few thousand points.

#include <utility>

#include "mrbound/core_model.hpp"
#include "mrbound/wavefunction.hpp"

namespace mrbound {

struct SolverConfig {
  double r_min = 1e-6;   ///< grid start, same length unit as b
  double r_max = 50.0;   ///< grid end
  int steps = 20000;     ///< grid points
  double e_lo = -1.0;    ///< energy bracket, hbar^2/(2 mu b^2) units
  double e_hi = -0.5;
  double tol = 1e-9;     ///< bracket width at convergence

  /// Throws ConfigError unless 0 < r_min < r_max, steps >= 1000, tol > 0, e_lo < e_hi.
  void validate() const;
};

/// Grid and bracket around an energy estimate e_estimate < 0:
/// r_min = 1e-6 b, r_max = max(50 b, 30 b/sqrt(-e_estimate)), bracket e_estimate +- 10%.
SolverConfig default_config(const PotentialParams& p, double e_estimate);

struct MatchResult {
  double defect = 0.0;     ///< w_out'/w_out - w_in'/w_in at the matching point
  int node_count = 0;      ///< sign changes of the outward solution before the match
  double match_radius = 0.0;
};

/// One outward/inward shot at energy E < 0. The matching point is the outermost
/// classical turning point of the exact effective potential, or the middle of
/// the grid when there is none. Throws ConfigError if it is at the grid edge.
MatchResult integrate_radial(const PotentialParams& p, int l, double E, const SolverConfig& cfg);

struct NumericalEigenvalue {
  double energy = 0.0;
  int node_count = 0;
  bool converged = false;
  int iterations = 0;
};

/// Bisection on (node count, matching defect) inside [cfg.e_lo, cfg.e_hi].
/// Throws BracketError when the bracket ends cannot enclose target_nodes and
/// NoEigenvalueError when the defect does not change sign in the bracket.
NumericalEigenvalue find_eigenvalue(const PotentialParams& p, int l, int target_nodes,
                                    const SolverConfig& cfg);

/// Solves state q starting from the closed-form energy under scheme s, widening
/// the bracket a few times if the seed bracket misses. Throws
/// NoEigenvalueError when the closed form has no bound level to seed from.
NumericalEigenvalue solve_state(const PotentialParams& p, const ApproxScheme& s,
                                const QuantumState& q, int steps = 20000, double tol = 1e-9);

/// ||H u - E u|| / ||E u|| for the closed-form wave function with the exact
/// effective potential. The L2 norms run over cfg.steps points uniform in
/// ln r from cfg.r_min to min(cfg.r_max, 45 b/epsilon); u'' comes from
/// 5-point differences in ln r with spacing max(grid step, 0.01).
double residual_norm(const WavefunctionSpec& spec, const SolverConfig& cfg);

}  // namespace mrbound

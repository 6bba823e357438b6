#include "mrbound/numerov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "mrbound/errors.hpp"
#include "mrbound/spectrum.hpp"

namespace mrbound {

namespace {

constexpr long double kRescale = 1e100L;
constexpr double kResidualStencil = 1e-2;

// Everything about the grid that does not depend on the trial energy.
struct LogGrid {
  double dt = 0.0;
  std::vector<double> x2;         // (r/b)^2
  std::vector<double> potential;  // V(x)
  std::vector<double> centrifugal;  // l(l+1)/x^2
  double shift = 0.0;             // (l + 1/2)^2
  double kappa = 0.0;             // w ~ x^kappa sum_k c_k x^k at the origin
  std::array<double, 7> series{};  // x^2 V = sum_k series[k] x^k
  double x_min = 0.0;
};

LogGrid make_grid(const PotentialParams& p, int l, const SolverConfig& cfg) {
  LogGrid g;
  const double t0 = std::log(cfg.r_min / p.b);
  const double t1 = std::log(cfg.r_max / p.b);
  const auto n = static_cast<std::size_t>(cfg.steps);
  g.dt = (t1 - t0) / static_cast<double>(n - 1);
  g.x2.resize(n);
  g.potential.resize(n);
  g.centrifugal.resize(n);
  g.shift = (l + 0.5) * (l + 0.5);
  // x^2 V -> alpha(alpha-1) as x -> 0, so the regular solution starts as
  // x^kappa with kappa^2 = (l + 1/2)^2 + alpha(alpha-1) >= l(l+1).
  g.kappa = std::sqrt(g.shift + p.alpha_term());
  // x/(e^x - 1) = sum B_k x^k / k!
  constexpr std::array<double, 7> bern = {1.0, -0.5, 1.0 / 12.0, 0.0, -1.0 / 720.0, 0.0, 1.0 / 30240.0};
  for (std::size_t k = 0; k < bern.size(); ++k) {
    double square = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
      square += bern[j] * bern[k - j];
    }
    g.series[k] = p.alpha_term() * square - (k > 0 ? p.A * bern[k - 1] : 0.0);
  }
  g.x_min = std::exp(t0);
  const PotentialParams unit{p.alpha, p.A, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::exp(t0 + g.dt * static_cast<double>(i));
    g.x2[i] = x * x;
    g.potential[i] = potential_value(unit, x);
    g.centrifugal[i] = l * (l + 1.0) / g.x2[i];
  }
  return g;
}

// Regular solution of w'' = [x^2 (V - E) + (l + 1/2)^2] w near the origin:
// c_k [(kappa + k)^2 - kappa^2] = sum_{j>=1} q_j c_{k-j}, with q the Taylor
// coefficients of x^2 (V - E).
long double frobenius(const LogGrid& g, double E, long double x) {
  using real = long double;
  constexpr std::size_t K = std::tuple_size_v<decltype(g.series)>;
  std::array<real, K> q{};
  for (std::size_t k = 1; k < K; ++k) {
    q[k] = g.series[k];
  }
  q[2] -= E;
  std::array<real, K> c{};
  c[0] = 1.0L;
  real sum = 1.0L;
  real xk = 1.0L;
  for (std::size_t k = 1; k < K; ++k) {
    real acc = 0.0L;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += q[j] * c[k - j];
    }
    c[k] = acc / (k * (2.0L * g.kappa + k));
    xk *= x;
    sum += c[k] * xk;
  }
  return std::pow(x, static_cast<real>(g.kappa)) * sum;
}

MatchResult shoot(const LogGrid& g, double E, double b) {
  const std::size_t n = g.x2.size();

  std::size_t m = n;
  for (std::size_t i = n; i-- > 0;) {
    if (g.potential[i] + g.centrifugal[i] - E < 0.0) {
      m = i;
      break;
    }
  }
  if (m == n) {
    m = n / 2;
  }
  if (m < 2 || m + 3 > n) {
    throw ConfigError("matching point r = " + std::to_string(b * std::sqrt(g.x2[std::min(m, n - 1)])) +
                      " lies at the grid edge; enlarge [r_min, r_max]");
  }

  // Extended precision keeps the accumulated recurrence roundoff well below
  // the energy tolerance; in double it sits near 1e-11 relative.
  using real = long double;
  const real h12 = static_cast<real>(g.dt) * g.dt / 12.0L;
  std::vector<real> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = 1.0L - h12 * (static_cast<real>(g.x2[i]) * (static_cast<real>(g.potential[i]) - E) +
                         g.shift);
  }

  // Outward from the regular solution w ~ x^kappa.
  std::vector<real> w(m + 2);
  const real x0 = g.x_min;
  const real x1 = x0 * std::exp(static_cast<real>(g.dt));
  w[0] = frobenius(g, E, x0);
  w[1] = frobenius(g, E, x1);
  int nodes = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    w[i + 1] = ((12.0L - 10.0L * c[i]) * w[i] - c[i - 1] * w[i - 1]) / c[i + 1];
    if ((w[i + 1] < 0.0) != (w[i] < 0.0) && w[i + 1] != 0.0) {
      ++nodes;
    }
    if (std::abs(w[i + 1]) > kRescale) {
      for (std::size_t k = 0; k <= i + 1; ++k) {
        w[k] /= kRescale;
      }
    }
  }

  // Inward from the decaying tail.
  std::vector<real> v(n, 0.0L);
  v[n - 2] = 1e-30L;
  for (std::size_t i = n - 2; i >= m; --i) {
    v[i - 1] = ((12.0L - 10.0L * c[i]) * v[i] - c[i + 1] * v[i + 1]) / c[i - 1];
    if (std::abs(v[i - 1]) > kRescale) {
      for (std::size_t k = i - 1; k < n; ++k) {
        v[k] /= kRescale;
      }
    }
  }

  MatchResult out;
  out.defect = static_cast<double>((w[m + 1] - w[m - 1]) / w[m] - (v[m + 1] - v[m - 1]) / v[m]);
  out.node_count = nodes;
  out.match_radius = b * std::sqrt(g.x2[m]);
  return out;
}

// True when E lies above the level with target_nodes nodes.
bool too_high(const MatchResult& r, int target_nodes) {
  return r.node_count > target_nodes || (r.node_count == target_nodes && r.defect < 0.0);
}

void require_negative(double E) {
  if (!(E < 0.0)) {
    throw DomainError("bound-state search needs E < 0, got " + std::to_string(E));
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw ConfigError("solver grid needs 0 < r_min < r_max");
  }
  if (steps < 1000) {
    throw ConfigError("solver grid needs at least 1000 points");
  }
  if (!(tol > 0.0)) {
    throw ConfigError("solver tolerance must be positive");
  }
  if (!(e_lo < e_hi)) {
    throw ConfigError("energy bracket needs e_lo < e_hi");
  }
}

SolverConfig default_config(const PotentialParams& p, double e_estimate) {
  require_negative(e_estimate);
  SolverConfig cfg;
  cfg.r_min = 1e-6 * p.b;
  cfg.r_max = std::max(50.0 * p.b, 30.0 * p.b / std::sqrt(-e_estimate));
  cfg.e_lo = 1.1 * e_estimate;
  cfg.e_hi = 0.9 * e_estimate;
  return cfg;
}

MatchResult integrate_radial(const PotentialParams& p, int l, double E, const SolverConfig& cfg) {
  p.validate();
  cfg.validate();
  require_negative(E);
  if (l < 0) {
    throw DomainError("orbital quantum number must be non-negative");
  }
  return shoot(make_grid(p, l, cfg), E, p.b);
}

NumericalEigenvalue find_eigenvalue(const PotentialParams& p, int l, int target_nodes,
                                    const SolverConfig& cfg) {
  p.validate();
  cfg.validate();
  require_negative(cfg.e_lo);
  require_negative(cfg.e_hi);
  if (l < 0 || target_nodes < 0) {
    throw DomainError("quantum numbers must be non-negative");
  }
  const LogGrid grid = make_grid(p, l, cfg);

  const MatchResult at_lo = shoot(grid, cfg.e_lo, p.b);
  const MatchResult at_hi = shoot(grid, cfg.e_hi, p.b);
  if (at_lo.node_count > target_nodes || at_hi.node_count < target_nodes) {
    throw BracketError("bracket [" + std::to_string(cfg.e_lo) + ", " + std::to_string(cfg.e_hi) +
                       "] spans node counts " + std::to_string(at_lo.node_count) + ".." +
                       std::to_string(at_hi.node_count) + ", wanted " +
                       std::to_string(target_nodes));
  }
  if (too_high(at_lo, target_nodes) || !too_high(at_hi, target_nodes)) {
    throw NoEigenvalueError("matching defect does not change sign in [" +
                            std::to_string(cfg.e_lo) + ", " + std::to_string(cfg.e_hi) + "]");
  }

  double lo = cfg.e_lo;
  double hi = cfg.e_hi;
  NumericalEigenvalue out;
  while (hi - lo > cfg.tol && out.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (too_high(shoot(grid, mid, p.b), target_nodes)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++out.iterations;
  }
  out.energy = 0.5 * (lo + hi);
  out.converged = hi - lo <= cfg.tol;
  out.node_count = target_nodes;
  return out;
}

NumericalEigenvalue solve_state(const PotentialParams& p, const ApproxScheme& s,
                                const QuantumState& q, int steps, double tol) {
  const SpectrumResult seed = energy(p, s, q);
  if (!seed.bound() || !(*seed.energy < 0.0)) {
    throw NoEigenvalueError("no closed-form level " + q.label() + " to seed the search");
  }
  const double e0 = *seed.energy;
  // Progressively wider brackets; the upper end stays below threshold.
  constexpr double kWiden[][2] = {{1.1, 0.9}, {1.5, 0.5}, {3.0, 0.1}};
  for (std::size_t attempt = 0; attempt < std::size(kWiden); ++attempt) {
    SolverConfig cfg = default_config(p, kWiden[attempt][1] * e0);
    cfg.e_lo = kWiden[attempt][0] * e0;
    cfg.e_hi = kWiden[attempt][1] * e0;
    cfg.steps = steps;
    cfg.tol = tol;
    try {
      return find_eigenvalue(p, q.l, q.n, cfg);
    } catch (const BracketError&) {
      if (attempt + 1 == std::size(kWiden)) {
        throw;
      }
    } catch (const NoEigenvalueError&) {
      if (attempt + 1 == std::size(kWiden)) {
        throw;
      }
    }
  }
  throw NoEigenvalueError("unreachable");
}

double residual_norm(const WavefunctionSpec& spec, const SolverConfig& cfg) {
  cfg.validate();
  const PotentialParams& p = spec.params;
  const double b = p.b;
  const double x_end = std::min(cfg.r_max / b, 45.0 / spec.epsilon);
  const double t0 = std::log(cfg.r_min / b);
  const double t1 = std::log(x_end);
  if (!(t1 > t0)) {
    throw ConfigError("residual grid is empty; r_min must lie below 45 b/epsilon");
  }
  // Uniform in t = ln x so that the x^nu behaviour at the origin stays smooth:
  // u'' = e^{-2t} (w_tt - w_t) with w(t) = u(e^t).
  const auto n = static_cast<std::size_t>(cfg.steps);
  const double dt = (t1 - t0) / static_cast<double>(n - 1);
  const double e = *energy(p, spec.scheme, spec.state).energy;
  const double ll = spec.state.l_factor();
  const PotentialParams unit{p.alpha, p.A, 1.0};

  // Stencil spacing in t, floored so that roundoff in u (amplified by 1/H^2)
  // does not swamp the cancellation between u'' and alpha(alpha-1)/x^2 near
  // the origin.
  const double H = std::max(dt, kResidualStencil);
  auto w = [&](double t) { return radial_wavefunction(spec, b * std::exp(t)); };
  double r2 = 0.0;
  double eu2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t0 + dt * static_cast<double>(i);
    const double x = std::exp(t);
    const double wm2 = w(t - 2.0 * H);
    const double wm1 = w(t - H);
    const double w0 = w(t);
    const double wp1 = w(t + H);
    const double wp2 = w(t + 2.0 * H);
    const double w_t = (wm2 - 8.0 * wm1 + 8.0 * wp1 - wp2) / (12.0 * H);
    const double w_tt = (-wp2 + 16.0 * wp1 - 30.0 * w0 + 16.0 * wm1 - wm2) / (12.0 * H * H);
    const double u_xx = (w_tt - w_t) / (x * x);
    const double veff = potential_value(unit, x) + ll / (x * x);
    const double res = -u_xx + (veff - e) * w0;
    // dx = x dt
    r2 += res * res * x;
    eu2 += e * e * w0 * w0 * x;
  }
  return std::sqrt(r2 / eu2);
}

}  // namespace mrbound

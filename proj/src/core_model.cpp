#include "mrbound/core_model.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "mrbound/errors.hpp"

namespace mrbound {

namespace {

constexpr std::string_view kOrbitalLetters = "spdfghiklmnoqrtuvwxyz";

// e^{r/b} - 1 without cancellation near r = 0.
double exp_minus_one(const PotentialParams& p, double r) { return std::expm1(r / p.b); }

void require_positive_r(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("radial coordinate must be positive and finite, got " + std::to_string(r));
  }
}

void require_minimum_region(const PotentialParams& p) {
  p.validate();
  if (!(p.A > 0.0) || !(p.alpha < 0.0 || p.alpha > 1.0)) {
    throw NoMinimumError("Manning-Rosen potential has a relative minimum only for A > 0 and "
                         "alpha < 0 or alpha > 1 (alpha = " +
                         std::to_string(p.alpha) + ", A = " + std::to_string(p.A) + ")");
  }
}

}  // namespace

void PotentialParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(A) || !std::isfinite(b)) {
    throw DomainError("potential parameters must be finite");
  }
  if (!(b > 0.0)) {
    throw DomainError("range parameter b must be positive, got " + std::to_string(b));
  }
}

std::string QuantumState::label() const {
  std::string out = std::to_string(n + l + 1);
  if (l >= 0 && static_cast<std::size_t>(l) < kOrbitalLetters.size()) {
    out.push_back(kOrbitalLetters[static_cast<std::size_t>(l)]);
  } else {
    out += "[l=" + std::to_string(l) + "]";
  }
  return out;
}

QuantumState parse_state_label(std::string_view label) {
  std::size_t pos = 0;
  while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
    ++pos;
  }
  if (pos == 0 || pos + 1 != label.size()) {
    throw DomainError("state label must look like '2p', got '" + std::string(label) + "'");
  }
  const int principal = std::stoi(std::string(label.substr(0, pos)));
  const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(label[pos])));
  const auto l_pos = kOrbitalLetters.find(letter);
  if (l_pos == std::string_view::npos) {
    throw DomainError("unknown orbital letter '" + std::string(1, label[pos]) + "'");
  }
  const int l = static_cast<int>(l_pos);
  const int n = principal - l - 1;
  if (n < 0) {
    throw DomainError("state '" + std::string(label) + "' has negative radial quantum number");
  }
  return {n, l};
}

ValidityFlags validity_flags(const PotentialParams& p) {
  ValidityFlags flags;
  if (p.A != 0.0) {
    const double ratio = p.alpha_term() / p.A;
    flags.alpha_term_small = std::abs(ratio) < 0.1;
    flags.alpha_term_positive = ratio > 0.0;
  }
  return flags;
}

double potential_value(const PotentialParams& p, double r) {
  p.validate();
  require_positive_r(r);
  const double y = exp_minus_one(p, r);
  return p.alpha_term() / (y * y) - p.A / y;
}

PotentialMinimum potential_minimum(const PotentialParams& p) {
  require_minimum_region(p);
  const double eps1 = p.alpha_term();
  return {p.b * std::log1p(2.0 * eps1 / p.A), -p.A * p.A / (4.0 * eps1)};
}

double force_constant(const PotentialParams& p) {
  require_minimum_region(p);
  const double eps1 = p.alpha_term();
  const double s = p.A + 2.0 * eps1;
  const double b2 = p.b * p.b;
  return p.A * p.A * s * s / (8.0 * b2 * b2 * eps1 * eps1 * eps1);
}

double effective_potential(const PotentialParams& p, int l, double r) {
  if (l < 0) {
    throw DomainError("orbital quantum number must be non-negative");
  }
  const double v = potential_value(p, r);
  const double ratio = p.b / r;
  return v + static_cast<double>(l) * (l + 1) * ratio * ratio;
}

}  // namespace mrbound

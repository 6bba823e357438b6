#include "mrbound/centrifugal.hpp"

#include <cmath>
#include <string>

#include "mrbound/errors.hpp"

namespace mrbound {

ApproxScheme ApproxScheme::usual() { return {0.0, 1.0, 1.0, SchemeVariant::Usual}; }

ApproxScheme ApproxScheme::improved(double d0) { return {d0, 1.0, 1.0, SchemeVariant::Improved}; }

ApproxScheme make_scheme(SchemeVariant variant, const PotentialParams& p) {
  switch (variant) {
    case SchemeVariant::Usual:
      return ApproxScheme::usual();
    case SchemeVariant::Improved:
      return ApproxScheme::improved();
    case SchemeVariant::WeiDong:
      break;
  }

  p.validate();
  if (p.A == 0.0) {
    throw SchemeUndefinedError("Wei-Dong coefficients need A != 0");
  }
  const double A = p.A;
  const double eps1 = p.alpha_term();
  const double ratio = 2.0 * eps1 / A;
  if (!(1.0 + ratio > 0.0)) {
    throw SchemeUndefinedError("Wei-Dong coefficients need 1 + 2 alpha(alpha-1)/A > 0");
  }
  if (std::log1p(ratio) == 0.0) {
    throw SchemeUndefinedError("Wei-Dong coefficients are singular for alpha(alpha-1) = 0");
  }
  // The numerators cancel to O((eps1/A)^2) of their terms; log1p and extended
  // precision keep about 12 digits for alpha(alpha-1)/A ~ 1e-3.
  using real = long double;
  const real e1 = eps1;
  const real a = A;
  const real lg = std::log1p(static_cast<real>(2.0L * e1 / a));
  const real eps2 = 1.0L + 2.0L * e1 / a;
  const real eps3 = a * eps2;
  const real eps4 = static_cast<real>(p.b) * eps3;
  const real lg2 = lg * lg;
  const real denom = eps4 * eps4 * lg2 * lg2;

  ApproxScheme s;
  s.variant = SchemeVariant::WeiDong;
  s.d0 = static_cast<double>(
      (12.0L * e1 * e1 - 4.0L * e1 * (2.0L * a + 3.0L * e1) * lg + eps3 * eps3 * lg2) / denom);
  s.d1 = static_cast<double>(8.0L * e1 * e1 * (-6.0L * e1 + (3.0L * a + 4.0L * e1) * lg) /
                             (a * denom));
  s.d2 = static_cast<double>(-16.0L * e1 * e1 * e1 * (-3.0L * e1 + eps3 * lg) / (a * a * denom));
  return s;
}

double approx_inverse_r2(const ApproxScheme& s, double b, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("radial coordinate must be positive and finite");
  }
  if (!(b > 0.0)) {
    throw DomainError("range parameter b must be positive");
  }
  const double y = std::expm1(r / b);
  return (s.d0 + s.d1 / y + s.d2 / (y * y)) / (b * b);
}

std::string_view to_string(SchemeVariant v) {
  switch (v) {
    case SchemeVariant::Usual:
      return "usual";
    case SchemeVariant::Improved:
      return "improved";
    case SchemeVariant::WeiDong:
      return "wei-dong";
  }
  return "unknown";
}

SchemeVariant parse_scheme_variant(std::string_view name) {
  if (name == "usual") return SchemeVariant::Usual;
  if (name == "improved") return SchemeVariant::Improved;
  if (name == "wei-dong") return SchemeVariant::WeiDong;
  throw DomainError("unknown scheme '" + std::string(name) + "' (expected usual, improved or wei-dong)");
}

}  // namespace mrbound

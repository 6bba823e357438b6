#pragma once

// Exponential-form replacements of the centrifugal 1/r^2 term:
//
//   1/r^2 ~ (1/b^2) [D0 + D1/(e^{r/b}-1) + D2/(e^{r/b}-1)^2]

#include <string>
#include <string_view>

#include "mrbound/core_model.hpp"

namespace mrbound {

enum class SchemeVariant { Usual, Improved, WeiDong };

/// D0 that reproduces the published "present" columns of the Manning-Rosen
/// ro-vibrational tables (the closed form D0 = 1/12 does not; see README).
inline constexpr double kTabulatedImprovedD0 = 0.082305;

struct ApproxScheme {
  double d0 = 0.0;
  double d1 = 1.0;
  double d2 = 1.0;
  SchemeVariant variant = SchemeVariant::Usual;

  /// D0 = 0, D1 = D2 = 1.
  static ApproxScheme usual();
  /// D0 = 1/12, D1 = D2 = 1. A different D0 may be passed explicitly.
  static ApproxScheme improved(double d0 = 1.0 / 12.0);
};

/// Builds the coefficient set for a variant. Usual and Improved ignore p.
///
/// WeiDong evaluates the closed forms with eps1 = alpha(alpha-1),
/// eps2 = 1 + 2 eps1/A, eps3 = A eps2 and eps4 = b eps3 exactly as published;
/// because of eps4 the coefficients scale as 1/b^2 and only approach
/// (1/12, 1, 1) for b = 1 and small alpha(alpha-1)/A.
/// Throws SchemeUndefinedError if eps2 <= 0 or log(eps2) == 0.
ApproxScheme make_scheme(SchemeVariant variant, const PotentialParams& p);

/// (1/b^2) [D0 + D1/(e^{r/b}-1) + D2/(e^{r/b}-1)^2]. Throws DomainError for r <= 0.
double approx_inverse_r2(const ApproxScheme& s, double b, double r);

/// "usual" | "improved" | "wei-dong"
std::string_view to_string(SchemeVariant v);
/// Inverse of to_string; throws DomainError for unknown names.
SchemeVariant parse_scheme_variant(std::string_view name);

}  // namespace mrbound

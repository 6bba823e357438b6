#pragma once

namespace mrbound {

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ln of the Pochhammer symbol (x)_k = Gamma(x + k)/Gamma(x) for x > 0.
double log_pochhammer(double x, int k);

/// Rising factorial (x)_k by direct product; valid for any real x.
double pochhammer(double x, int k);

/// Terminating Gauss series 2F1(-n, b; c; z) = sum_{k=0}^{n} (-n)_k (b)_k / (c)_k z^k / k!.
/// Throws PoleError if c + k is zero for some k < n.
double hyp2f1_terminating(int n, double b, double c, double z);

/// Jacobi polynomial P_n^{(nu, mu)}(x) by the three-term recurrence.
double jacobi_p(int n, double nu, double mu, double x);

}  // namespace mrbound

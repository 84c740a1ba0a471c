#pragma once

// Gamma-function kernel. Every power rule for the Caputo derivative and the
// Riemann-Liouville integral reduces to a ratio Γ(p+1)/Γ(q+1); this header is
// the only place such ratios are computed.

namespace frac {

/// ln Γ(x) for x > 0. Lanczos (g = 7, 9 terms), log form.
/// Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Γ(p+1)/Γ(q+1).
///
/// The pole-zero convention is exact: if q+1 is a non-positive integer the
/// result is 0. Negative non-integer arguments are shifted into (0.5, ∞)
/// with Γ(z+1) = zΓ(z); the remaining ratio is evaluated in log space, so
/// results stay finite whenever the ratio itself is representable.
///
/// Throws DomainError if p+1 is a non-positive integer.
double gamma_ratio(double p, double q);

/// 1/Γ(x), exactly 0 at the poles.
double reciprocal_gamma(double x);

/// Riemann-Liouville derivative of the constant 1: (x-a)^{-α}/Γ(1-α).
/// Only meaningful as a contrast to the Caputo derivative, which is 0.
/// Requires 0 < alpha < 1 and x_minus_a > 0.
double rl_derivative_of_constant(double alpha, double x_minus_a);

/// True if x is a non-positive integer (a pole of Γ).
bool is_gamma_pole(double x);

}  // namespace frac

#pragma once

#include <vector>

#include "frac/residual.hpp"
#include "frac/series.hpp"

namespace frac {

/// Parameters of Σ Π(a_i)^α_k / Π(b_j)^α_k · (z-z0)^{kα}/Γ(kα+1).
struct HypergeometricSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  double alpha = 1.0;
  double shift = 0.0;  ///< expansion point z0
};

/// Generalized fractional hypergeometric series through exponent cutoff.
/// Throws ParameterError naming the first k at which a lower Pochhammer
/// symbol vanishes.
FracSeries frac_pfq_series(const HypergeometricSpec& spec, double cutoff);

/// Σ (a)^α_k/(c)^α_k · z^{kα}/Γ(kα+1); at α = 1 this is 1F1(a; c; z).
FracSeries frac_confluent_series(double a, double c, double alpha, double cutoff);

/// Σ (a)^α_k (b)^α_k/(c)^α_k · z^{kα}/Γ(kα+1); at α = 1 this is 2F1(a, b; c; z).
FracSeries frac_gauss_series(double a, double b, double c, double alpha, double cutoff);

/// z^α (D^α)² y + (c - z^α) D^α y - a y for y expanded at z = 0.
/// (D^α)² is D^α applied twice.
ResidualReport confluent_residual(const FracSeries& y, double a, double c, double alpha);

/// ab f + (a+b) t^α D^α f + t^α D^α[t^α D^α f] - c D^α f - t^α (D^α)² f,
/// t = z - z0, for f expanded at z0.
ResidualReport gauss_residual(const FracSeries& f, double a, double b, double c, double alpha,
                              double z0);

}  // namespace frac

#include "frac/hypergeometric.hpp"

#include <array>
#include <cmath>
#include <string>

#include "frac/error.hpp"
#include "frac/gamma.hpp"
#include "frac/special.hpp"

namespace frac {
namespace {

constexpr double kVanishing = 1e-12;

bool vanishes(double factor, double parameter) {
  return std::abs(factor) <= kVanishing * std::max(1.0, std::abs(parameter));
}

void require_series_alpha(const FracSeries& y, double alpha, double base, const char* what) {
  const IndexPair& idx = y.indices();
  if (idx.base() != base) {
    throw IncompatibleError(std::string(what) + ": series must be expanded at " +
                            std::to_string(base));
  }
  if (!idx.lattice_key(alpha)) {
    throw IncompatibleError(std::string(what) + ": alpha is not on the series' lattice");
  }
}

}  // namespace

FracSeries frac_pfq_series(const HypergeometricSpec& spec, double cutoff) {
  if (!std::isfinite(spec.alpha) || spec.alpha <= 0.0) {
    throw DomainError("frac_pfq_series: alpha must be positive");
  }
  const IndexPair idx = IndexPair::single(spec.alpha, spec.shift);
  std::vector<PochhammerTable> upper, lower;
  for (double a : spec.upper) upper.emplace_back(a, spec.alpha);
  for (double b : spec.lower) lower.emplace_back(b, spec.alpha);

  SeriesBuilder out(idx, cutoff);
  for (std::size_t k = 0;; ++k) {
    const ExponentKey key = idx.key_of(static_cast<std::int64_t>(k));
    const double e = idx.exponent(key);
    if (!within_cutoff(e, cutoff)) break;
    double c = reciprocal_gamma(e + 1.0);
    for (auto& t : upper) c *= t[k];
    for (auto& t : lower) {
      const double den = t[k];
      // (b)^α_k vanishes from the first k whose new factor b + r does.
      const double factor = k == 0 ? 1.0 : den / t[k - 1];
      if (vanishes(factor, t.a())) {
        throw ParameterError("lower parameter " + std::to_string(t.a()) +
                             " makes the Pochhammer symbol vanish at k = " + std::to_string(k));
      }
      c /= den;
    }
    out.add(key, c);
  }
  return out.build();
}

FracSeries frac_confluent_series(double a, double c, double alpha, double cutoff) {
  return frac_pfq_series({{a}, {c}, alpha, 0.0}, cutoff);
}

FracSeries frac_gauss_series(double a, double b, double c, double alpha, double cutoff) {
  return frac_pfq_series({{a, b}, {c}, alpha, 0.0}, cutoff);
}

ResidualReport confluent_residual(const FracSeries& y, double a, double c, double alpha) {
  require_series_alpha(y, alpha, 0.0, "confluent_residual");
  const FracSeries d1 = caputo_derivative(y, alpha);
  const FracSeries d2 = caputo_derivative(d1, alpha);
  const std::array parts = {
      multiply_by_power(d2, alpha),
      scale(d1, c),
      scale(multiply_by_power(d1, alpha), -1.0),
      scale(y, -a),
  };
  return ResidualReport::assemble(parts);
}

ResidualReport gauss_residual(const FracSeries& f, double a, double b, double c, double alpha,
                              double z0) {
  require_series_alpha(f, alpha, z0, "gauss_residual");
  const FracSeries d1 = caputo_derivative(f, alpha);
  const FracSeries t_d1 = multiply_by_power(d1, alpha);
  const FracSeries t_d_t_d1 = multiply_by_power(caputo_derivative(t_d1, alpha), alpha);
  const FracSeries t_d2 = multiply_by_power(caputo_derivative(d1, alpha), alpha);
  const std::array parts = {
      scale(f, a * b),
      scale(t_d1, a + b),
      t_d_t_d1,
      scale(d1, -c),
      scale(t_d2, -1.0),
  };
  return ResidualReport::assemble(parts);
}

}  // namespace frac

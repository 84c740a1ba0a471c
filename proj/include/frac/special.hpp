#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "frac/series.hpp"

namespace frac {

/// Fractional rising factorial (a)^α_k:
///   (a)^α_0 = 1,  (a)^α_1 = a,
///   (a)^α_k = (a + Γ((k-1)α+1)/Γ((k-2)α+1)) · (a)^α_{k-1},  k >= 2.
/// At α = 1 each factor is a + k - 1 and the classical (a)_k is recovered.
///
/// Values are extended on demand; a table is a plain value and is not
/// thread-safe on its own (see PochhammerCache).
class PochhammerTable {
 public:
  PochhammerTable(double a, double alpha);

  double a() const { return a_; }
  double alpha() const { return alpha_; }
  double operator[](std::size_t k);
  /// Entries computed so far.
  const std::vector<double>& values() const { return values_; }

 private:
  double a_;
  double alpha_;
  std::vector<double> values_;
};

/// Process-wide memo of Pochhammer tables keyed on the exact bit patterns
/// of (a, α). Readers only ever observe fully written entries.
class PochhammerCache {
 public:
  double value(double a, double alpha, std::size_t k);

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<double>> tables_;
};

/// (a)^α_k through the shared cache. Throws DomainError for alpha <= 0.
double frac_pochhammer(double a, double alpha, std::size_t k);

/// E_α((x-a)^α) = Σ (x-a)^{mα}/Γ(mα+1), all mα <= cutoff.
FracSeries mittag_leffler_series(double alpha, double base, double cutoff);

/// E_α(z) = Σ z^k/Γ(kα+1) for z >= 0 by plain partial summation.
/// Stops at the first omitted term below tol·|sum| once terms decrease and
/// k >= z^{1/α}/α. Throws DomainError for tol <= 0 or z < 0 and
/// NonConvergence past 10^6 terms.
double mittag_leffler_eval(double alpha, double z, double tol);

/// e^{(x-a)^α} = Σ (x-a)^{mα}/m!.
FracSeries frac_exp_series(double alpha, double base, double cutoff);

/// sin_α: odd m, coefficient (-1)^{(m-1)/2}/Γ(mα+1).
FracSeries frac_sin_series(double alpha, double base, double cutoff);
/// cos_α: even m, coefficient (-1)^{m/2}/Γ(mα+1).
FracSeries frac_cos_series(double alpha, double base, double cutoff);

}  // namespace frac

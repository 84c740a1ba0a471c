#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "frac/lattice.hpp"

namespace frac {

struct Term {
  ExponentKey key;
  double exponent = 0.0;
  double coefficient = 0.0;
};

/// Truncated generalized power series Σ c_k (x-a)^{μ_k} over an IndexPair.
///
/// Immutable once built. Terms are held in canonical order: ascending
/// exponent, ties broken by key. Exact zeros are not stored; every retained
/// exponent is <= cutoff. `dropped()` counts terms that operations producing
/// this series discarded for exceeding a cutoff.
class FracSeries {
 public:
  /// Throws DomainError for non-finite coefficients or exponents above cutoff.
  FracSeries(IndexPair indices, double cutoff, const std::map<ExponentKey, double>& terms = {},
             std::size_t dropped = 0);

  const IndexPair& indices() const { return indices_; }
  double cutoff() const { return cutoff_; }
  std::size_t dropped() const { return dropped_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// True iff some retained exponent is negative.
  bool singular_at_base() const;

  /// Coefficient stored under key (0 if absent).
  double coefficient(ExponentKey key) const;
  /// Coefficient of (x-a)^{mα+nβ}.
  double coefficient_at(std::int64_t m, std::int64_t n = 0) const {
    return coefficient(indices_.key_of(m, n));
  }

  /// Same coefficients at a different expansion point.
  FracSeries rebased(double base) const;

 private:
  IndexPair indices_;
  double cutoff_;
  std::size_t dropped_;
  std::vector<Term> terms_;
};

/// Accumulates terms, summing repeated keys, then drops anything above the
/// cutoff (counted) and exact zeros.
class SeriesBuilder {
 public:
  SeriesBuilder(IndexPair indices, double cutoff) : indices_(indices), cutoff_(cutoff) {}

  SeriesBuilder& add(ExponentKey key, double coefficient);
  SeriesBuilder& add_at(std::int64_t m, std::int64_t n, double coefficient) {
    return add(indices_.key_of(m, n), coefficient);
  }
  void count_dropped(std::size_t n) { dropped_ += n; }

  const IndexPair& indices() const { return indices_; }
  double cutoff() const { return cutoff_; }

  FracSeries build() const;

 private:
  IndexPair indices_;
  double cutoff_;
  std::size_t dropped_ = 0;
  std::map<ExponentKey, double> terms_;
};

/// True if exponent <= cutoff up to lattice rounding.
bool within_cutoff(double exponent, double cutoff);

/// Caputo derivative of the given order, termwise:
/// c (x-a)^μ ↦ c Γ(μ+1)/Γ(μ-order+1) (x-a)^{μ-order}.
/// Non-negative integers μ < ⌈order⌉ are annihilated. The left-sided
/// operator on (b-x)^μ follows the same rule. Result cutoff is
/// cutoff - order. Throws LatticeError / DomainError.
FracSeries caputo_derivative(const FracSeries& s, double order);

/// Riemann-Liouville integral, termwise:
/// c (x-a)^μ ↦ c Γ(μ+1)/Γ(μ+order+1) (x-a)^{μ+order}.
/// Cutoff is kept; terms pushed past it are dropped and counted.
FracSeries rl_integral(const FracSeries& s, double order);

/// Multiplies by (x-a)^power (power >= 0 on the lattice); cutoff is kept.
FracSeries multiply_by_power(const FracSeries& s, double power);

/// Coefficient-wise sum; cutoff is the smaller of the two.
FracSeries add(const FracSeries& a, const FracSeries& b);
FracSeries subtract(const FracSeries& a, const FracSeries& b);
FracSeries scale(const FracSeries& s, double k);

struct Evaluation {
  double value = 0.0;
  /// |last included term|, a heuristic truncation indicator.
  double tail_estimate = 0.0;
  bool tail_within_tolerance = true;
};

/// Sums the retained terms in canonical order at x.
/// Throws DomainError for x on the wrong side of the base and
/// SingularityError for x == base with negative exponents present.
Evaluation evaluate(const FracSeries& s, double x, double tail_tol = 1e-12);

/// Σ d_m (x-a)^{mα}/Γ(mα+1) from the values d_m = (D^α)^m f at a.
FracSeries fractional_taylor(std::span<const double> derivative_values, const IndexPair& indices);

/// Right series at a ↔ left series at b with the same coefficients.
FracSeries mirror(const FracSeries& s);

/// Coefficient-wise comparison on keys with exponent <= through.
/// Returns the largest |a-b|/max(|a|,|b|) over keys present in either
/// series (absolute difference where both are below 1e-300).
double max_relative_difference(const FracSeries& a, const FracSeries& b, double through);

}  // namespace frac

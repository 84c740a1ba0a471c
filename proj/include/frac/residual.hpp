#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "frac/series.hpp"

namespace frac {

/// Residual of one exponent of an assembled equation.
struct OrderResidual {
  ExponentKey key;
  double exponent = 0.0;
  double residual = 0.0;
  /// Largest |coefficient| any assembled part contributes at this exponent.
  double scale = 0.0;

  double relative() const { return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual); }
};

/// Sum of the parts of an equation written as Σ parts = 0, checked order by
/// order.
///
/// `exact_through` is the smallest cutoff among the parts: every part is
/// exact up to its own cutoff, so no truncated term can reach an exponent at
/// or below it. Orders above it are not reported.
class ResidualReport {
 public:
  static ResidualReport assemble(std::span<const FracSeries> parts);

  const FracSeries& residual() const { return residual_; }
  double exact_through() const { return exact_through_; }
  /// Terms discarded for exceeding a cutoff while the parts were built.
  std::size_t dropped() const { return residual_.dropped(); }
  const std::vector<OrderResidual>& orders() const { return orders_; }

  double max_relative() const;
  /// True if every order at or below exact_through has relative() <= tol.
  bool vanishes(double tol) const { return max_relative() <= tol; }

 private:
  ResidualReport(FracSeries residual, double exact_through, std::vector<OrderResidual> orders)
      : residual_(std::move(residual)), exact_through_(exact_through), orders_(std::move(orders)) {}

  FracSeries residual_;
  double exact_through_;
  std::vector<OrderResidual> orders_;
};

}  // namespace frac

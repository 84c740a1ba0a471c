#pragma once

// Direct quadrature of the defining integrals of the right-sided Caputo
// derivative and Riemann-Liouville integral, for black-box functions. These
// are independent of the termwise power rules in series.hpp and serve as
// their cross-check.

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "frac/report.hpp"

namespace frac {

using Evaluable = std::function<double(double)>;

enum class Scheme { l1_caputo, product_trapezoid_rlfi };

/// Uniform grid a = t_0 < … < t_n = x.
struct GridSpec {
  double a = 0.0;
  double x = 1.0;
  std::size_t n = 2;
  Scheme scheme = Scheme::l1_caputo;

  double step() const { return (x - a) / static_cast<double>(n); }
};

/// L1 scheme for D^α f(x), 0 < α < 1: f is replaced by its piecewise-linear
/// interpolant and the weakly singular kernel integrated exactly on each
/// piece. Error O(h^{2-α}) for smooth f; constants give exactly 0.
double caputo_l1(const Evaluable& f, const GridSpec& grid, double alpha);

/// Product-trapezoid rule for I^α f(x), α > 0: exact for piecewise-linear f.
double rlfi_quad(const Evaluable& f, const GridSpec& grid, double alpha);

/// Dispatches on grid.scheme.
double quadrature(const Evaluable& f, const GridSpec& grid, double alpha);

/// D^α at every node t_k = a + kh from samples f(t_0..t_N) (entry 0 is 0).
std::vector<double> caputo_l1_table(std::span<const double> samples, double h, double alpha);
/// I^α at every node from samples (entry 0 is 0).
std::vector<double> rlfi_table(std::span<const double> samples, double h, double alpha);

/// Nested-quadrature check of both inverse-pair identities at each x:
///   D^α I^α f(x) = f(x)  and  I^α D^α f(x) = f(x) - f(a).
/// The inner operator is tabulated on a grid 4× finer than the outer one
/// (grid_n subintervals on [a, x]) and linearly interpolated. Each check's
/// value is the absolute deviation.
Report verify_ftfc(const Evaluable& f, double alpha, double a, std::span<const double> xs,
                   std::size_t grid_n, double tolerance = 1e-2, std::string_view label = "f");

}  // namespace frac

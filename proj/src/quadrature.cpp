#include "frac/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "frac/error.hpp"
#include "frac/gamma.hpp"

namespace frac {
namespace {

void require_grid(const GridSpec& g) {
  if (g.n < 2) throw DomainError("grid needs at least 2 subintervals");
  if (!(g.x > g.a)) throw DomainError("grid needs x > a");
}

void require_l1_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("L1 scheme needs 0 < alpha < 1");
}

std::vector<double> sample(const Evaluable& f, double a, double h, std::size_t n) {
  std::vector<double> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = f(a + static_cast<double>(k) * h);
  return v;
}

// (1+u)^p - 1 without cancellation.
double power_minus_one(double u, double p) { return std::expm1(p * std::log1p(u)); }

// b_s = (s+1)^{1-α} - s^{1-α}: L1 kernel weight at distance s.
std::vector<double> l1_weights(std::size_t n, double alpha) {
  const double p = 1.0 - alpha;
  std::vector<double> b(n);
  if (n > 0) b[0] = 1.0;
  for (std::size_t s = 1; s < n; ++s) {
    const double sd = static_cast<double>(s);
    b[s] = std::pow(sd, p) * power_minus_one(1.0 / sd, p);
  }
  return b;
}

// W_s = (s+1)^{α+1} - 2s^{α+1} + (s-1)^{α+1}: interior product-trapezoid weight.
std::vector<double> trapezoid_weights(std::size_t n, double alpha) {
  const double p = alpha + 1.0;
  std::vector<double> w(n + 1, 0.0);
  if (n >= 1) w[1] = std::pow(2.0, p) - 2.0;
  for (std::size_t s = 2; s <= n; ++s) {
    const double sd = static_cast<double>(s);
    const double u = 1.0 / sd;
    w[s] = std::pow(sd, p) * (power_minus_one(u, p) + power_minus_one(-u, p));
  }
  return w;
}

double trapezoid_end_weight(std::size_t k, double alpha) {
  const double kd = static_cast<double>(k);
  return std::pow(kd - 1.0, alpha + 1.0) - (kd - 1.0 - alpha) * std::pow(kd, alpha);
}

// Piecewise-linear interpolant of a table on a uniform grid.
double interpolate(std::span<const double> table, double a, double h, double t) {
  const double pos = (t - a) / h;
  const auto last = table.size() - 1;
  if (pos <= 0.0) return table.front();
  const double idx = std::floor(pos);
  if (idx >= static_cast<double>(last)) return table.back();
  const auto i = static_cast<std::size_t>(idx);
  const double w = pos - idx;
  return w == 0.0 ? table[i] : (1.0 - w) * table[i] + w * table[i + 1];
}

std::string point_label(std::string_view label, const char* identity, double x) {
  std::ostringstream os;
  os << identity << " " << label << " x=" << x;
  return os.str();
}

}  // namespace

std::vector<double> caputo_l1_table(std::span<const double> samples, double h, double alpha) {
  require_l1_alpha(alpha);
  const std::size_t n = samples.size() - 1;
  const std::vector<double> b = l1_weights(n, alpha);
  std::vector<double> diff(n);
  for (std::size_t j = 0; j < n; ++j) diff[j] = samples[j + 1] - samples[j];
  const double factor = std::pow(h, -alpha) * reciprocal_gamma(2.0 - alpha);
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < k; ++j) acc += b[k - 1 - j] * diff[j];
    out[k] = factor * acc;
  }
  return out;
}

std::vector<double> rlfi_table(std::span<const double> samples, double h, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("rlfi: alpha must be positive");
  const std::size_t n = samples.size() - 1;
  const std::vector<double> w = trapezoid_weights(n, alpha);
  const double factor = std::pow(h, alpha) * reciprocal_gamma(alpha + 2.0);
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    double acc = trapezoid_end_weight(k, alpha) * samples[0] + samples[k];
    for (std::size_t j = 1; j < k; ++j) acc += w[k - j] * samples[j];
    out[k] = factor * acc;
  }
  return out;
}

double caputo_l1(const Evaluable& f, const GridSpec& grid, double alpha) {
  require_l1_alpha(alpha);
  require_grid(grid);
  const double h = grid.step();
  const std::vector<double> v = sample(f, grid.a, h, grid.n);
  const std::vector<double> b = l1_weights(grid.n, alpha);
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) acc += b[grid.n - 1 - j] * (v[j + 1] - v[j]);
  return std::pow(h, -alpha) * reciprocal_gamma(2.0 - alpha) * acc;
}

double rlfi_quad(const Evaluable& f, const GridSpec& grid, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("rlfi_quad: alpha must be positive");
  require_grid(grid);
  const double h = grid.step();
  const std::vector<double> v = sample(f, grid.a, h, grid.n);
  const std::vector<double> w = trapezoid_weights(grid.n, alpha);
  double acc = trapezoid_end_weight(grid.n, alpha) * v[0] + v[grid.n];
  for (std::size_t j = 1; j < grid.n; ++j) acc += w[grid.n - j] * v[j];
  return std::pow(h, alpha) * reciprocal_gamma(alpha + 2.0) * acc;
}

double quadrature(const Evaluable& f, const GridSpec& grid, double alpha) {
  return grid.scheme == Scheme::l1_caputo ? caputo_l1(f, grid, alpha) : rlfi_quad(f, grid, alpha);
}

Report verify_ftfc(const Evaluable& f, double alpha, double a, std::span<const double> xs,
                   std::size_t grid_n, double tolerance, std::string_view label) {
  require_l1_alpha(alpha);
  constexpr std::size_t kRefine = 4;
  Report report("nested");
  const double fa = f(a);
  for (double x : xs) {
    const GridSpec outer{a, x, grid_n, Scheme::l1_caputo};
    require_grid(outer);
    const double h = outer.step();
    const double fine_h = h / static_cast<double>(kRefine);
    const std::vector<double> fine = sample(f, a, fine_h, grid_n * kRefine);

    const std::vector<double> integral = rlfi_table(fine, fine_h, alpha);
    const Evaluable inner_integral = [&](double t) { return interpolate(integral, a, fine_h, t); };
    const double d_of_i = caputo_l1(inner_integral, outer, alpha);
    report.add(point_label(label, "D^a I^a", x), std::abs(d_of_i - f(x)), tolerance);

    const std::vector<double> derivative = caputo_l1_table(fine, fine_h, alpha);
    const Evaluable inner_derivative = [&](double t) {
      return interpolate(derivative, a, fine_h, t);
    };
    const double i_of_d = rlfi_quad(inner_derivative, outer, alpha);
    report.add(point_label(label, "I^a D^a", x), std::abs(i_of_d - (f(x) - fa)), tolerance);
  }
  return report;
}

}  // namespace frac

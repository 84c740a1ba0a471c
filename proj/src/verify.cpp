#include "frac/verify.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "frac/gamma.hpp"
#include "frac/quadrature.hpp"
#include "frac/series.hpp"

namespace frac {
namespace {

double rel(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string label(const char* what, double alpha, double beta) {
  std::ostringstream os;
  os << what << " alpha=" << alpha << " beta=" << beta;
  return os.str();
}

bool near_pole(double x) { return x <= 0.0 && std::abs(x - std::round(x)) < 1e-6; }

}  // namespace

Report verify_gamma_suite(std::uint64_t seed) {
  Report report("gamma");
  report.add("log_gamma(1) == 0", std::abs(log_gamma(1.0)), 0.0);
  report.add("log_gamma(2) == 0", std::abs(log_gamma(2.0)), 0.0);
  report.add("log_gamma(0.5) = ln sqrt(pi)", rel(log_gamma(0.5), 0.57236494292470008707), 1e-13);
  report.add("gamma_ratio(0,-1) == 0 (Caputo of a constant)", std::abs(gamma_ratio(0.0, -1.0)), 0.0);
  report.add("rl_derivative_of_constant(0.5, 1) = 1/sqrt(pi)",
             rel(rl_derivative_of_constant(0.5, 1.0), 0.56418958354775628695), 1e-13);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> arg(-0.99, 50.0);
  double reciprocity = 0.0, recurrence = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double p = arg(rng), q = arg(rng);
    if (near_pole(p + 1.0) || near_pole(q + 1.0)) continue;
    reciprocity = std::max(reciprocity, std::abs(gamma_ratio(p, q) * gamma_ratio(q, p) - 1.0));
    recurrence = std::max(recurrence, rel(gamma_ratio(p + 1.0, q), (p + 1.0) * gamma_ratio(p, q)));
  }
  report.add("reciprocity r(p,q) r(q,p) = 1", reciprocity, 1e-12);
  report.add("recurrence r(p+1,q) = (p+1) r(p,q)", recurrence, 1e-12);

  double factorials = 0.0;
  std::array<double, 21> fact{};
  fact[0] = 1.0;
  for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * static_cast<double>(k);
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; n <= m; ++n) factorials = std::max(factorials, rel(gamma_ratio(m, n), fact[m] / fact[n]));
  }
  report.add("integer ratios m!/n!, m <= 20", factorials, 1e-12);
  return report;
}

Report verify_power_rule_suite(std::size_t grid) {
  Report report("power-rule");
  constexpr std::array alphas = {0.3, 0.5, 0.7};
  constexpr std::array betas = {0.8, 1.0, 1.5, 2.3};
  for (double alpha : alphas) {
    for (double beta : betas) {
      const Evaluable f = [beta](double x) { return std::pow(x, beta); };
      const double numeric = caputo_l1(f, {0.0, 1.0, grid, Scheme::l1_caputo}, alpha);
      report.add(label("L1 vs power rule", alpha, beta),
                 std::abs(numeric - gamma_ratio(beta, beta - alpha)), 1e-3);
    }
  }
  for (double alpha : alphas) {
    const Evaluable f = [](double x) { return x * x; };
    const double exact = gamma_ratio(2.0, 2.0 - alpha);
    std::array<double, 4> err{};
    for (std::size_t i = 0; i < err.size(); ++i) {
      const std::size_t n = std::max<std::size_t>(2, grid >> (err.size() - 1 - i));
      err[i] = std::abs(caputo_l1(f, {0.0, 1.0, n, Scheme::l1_caputo}, alpha) - exact);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < err.size(); ++i) {
      const double order = std::log2(err[i] / err[i + 1]);
      worst = std::max(worst, std::abs(order - (2.0 - alpha)) / (2.0 - alpha));
    }
    report.add(label("L1 order on x^2 vs 2-alpha", alpha, 2.0), worst, 0.2);
  }
  return report;
}

Report verify_ftfc_suite(std::size_t grid, std::uint64_t seed, std::span<const double> alphas) {
  Report report("ftfc");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double part1 = 0.0, part2 = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = 0.05 + 0.9 * unit(rng);
    const double beta = 0.05 + 1.9 * unit(rng);
    const IndexPair idx = IndexPair::two(alpha, beta);
    SeriesBuilder b(idx, 12.0);
    const int count = 1 + static_cast<int>(unit(rng) * 50.0);
    for (int t = 0; t < count; ++t) {
      b.add_at(static_cast<std::int64_t>(unit(rng) * 8.0), static_cast<std::int64_t>(unit(rng) * 4.0),
               2.0 * unit(rng) - 1.0);
    }
    const FracSeries s = b.build();
    const FracSeries di = caputo_derivative(rl_integral(s, alpha), alpha);
    part1 = std::max(part1, max_relative_difference(di, s, di.cutoff()));
    const FracSeries id = rl_integral(caputo_derivative(s, alpha), alpha);
    const FracSeries c00(idx, s.cutoff(), {{ExponentKey{}, s.coefficient(ExponentKey{})}});
    const FracSeries without_constant = subtract(s, c00);
    part2 = std::max(part2, max_relative_difference(id, without_constant, id.cutoff()));
  }
  report.add("D^a I^a s = s, 100 random series", part1, 1e-12);
  report.add("I^a D^a s = s - c00, 100 random series", part2, 1e-12);

  const std::array<std::pair<const char*, Evaluable>, 3> functions = {{
      {"x", [](double x) { return x; }},
      {"x^1.5", [](double x) { return std::pow(x, 1.5); }},
      {"x^2", [](double x) { return x * x; }},
  }};
  constexpr std::array xs = {0.25, 0.5, 1.0};
  constexpr std::array default_alphas = {0.3, 0.5, 0.7};
  if (alphas.empty()) alphas = default_alphas;
  for (double alpha : alphas) {
    for (const auto& [name, f] : functions) {
      std::ostringstream title;
      title << name << " alpha=" << alpha;
      report.append(verify_ftfc(f, alpha, 0.0, xs, grid, 1e-2, title.str()));
    }
  }
  return report;
}

}  // namespace frac

#include "frac/fde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "frac/error.hpp"
#include "frac/gamma.hpp"

namespace frac {
namespace {

constexpr double kResidualTolerance = 1e-10;

void require_unit_alpha(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(what) + ": alpha must lie in (0,1)");
  }
}

std::string describe(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

ExponentKey lattice_or_zero(const IndexPair& idx, double value, const char* what) {
  if (value == 0.0) return {};
  auto key = idx.lattice_key(value);
  if (!key) throw LatticeError(std::string(what) + " " + describe(value) + " is off the lattice");
  return *key;
}

// k if order == kα for an integer k >= 1, else nullopt.
std::optional<int> alpha_steps(double order, double alpha) {
  const double k = std::round(order / alpha);
  if (k >= 1.0 && std::abs(k * alpha - order) <= 1e-12 * std::max(1.0, order)) {
    return static_cast<int>(k);
  }
  return std::nullopt;
}

double at(std::span<const double> v, std::size_t i) { return i < v.size() ? v[i] : 0.0; }

}  // namespace

DifferentiabilityReport classify(const FracSeries& s) {
  if (s.singular_at_base()) throw DomainError("classify: series has negative exponents");
  const IndexPair& idx = s.indices();
  for (const Term& t : s.terms()) {
    if (idx.is_alpha_multiple(t.key)) continue;
    DifferentiabilityReport r;
    r.classification = Differentiability::finite;
    r.witness_exponent = t.exponent;
    r.n_alpha = static_cast<std::int64_t>(std::floor(t.exponent / idx.alpha()));
    return r;
  }
  return {};
}

FdeProblem::FdeProblem(std::vector<OperatorTerm> terms, FracSeries rhs, double initial_value)
    : terms_(std::move(terms)), rhs_(std::move(rhs)), initial_value_(initial_value) {
  const IndexPair& idx = rhs_.indices();
  for (const OperatorTerm& t : terms_) {
    if (t.shift < 0.0 || t.order < 0.0) {
      throw DomainError("FdeProblem: shifts and orders must be non-negative");
    }
    lattice_or_zero(idx, t.shift, "FdeProblem: shift");
    lattice_or_zero(idx, t.order, "FdeProblem: order");
  }
}

FracSeries apply_term(const OperatorTerm& term, const FracSeries& y) {
  FracSeries r = y;
  if (term.order > 0.0) {
    if (auto k = alpha_steps(term.order, y.indices().alpha())) {
      for (int i = 0; i < *k; ++i) r = caputo_derivative(r, y.indices().alpha());
    } else {
      r = caputo_derivative(r, term.order);
    }
  }
  return scale(multiply_by_power(r, term.shift), term.coefficient);
}

ResidualReport assemble_residual(const FdeProblem& problem, const FracSeries& candidate) {
  if (!(candidate.indices() == problem.indices())) {
    throw IncompatibleError("assemble_residual: candidate and problem use different lattices");
  }
  std::vector<FracSeries> parts;
  parts.reserve(problem.terms().size() + 1);
  for (const OperatorTerm& t : problem.terms()) parts.push_back(apply_term(t, candidate));
  parts.push_back(scale(problem.rhs(), -1.0));
  return ResidualReport::assemble(parts);
}

FracSeries example_equation_rhs(double alpha, double base, double cutoff) {
  const IndexPair idx = IndexPair::two(alpha, 1.0, base);
  SeriesBuilder out(idx, cutoff);
  for (std::int64_t k = 0;; ++k) {
    const bool integer_in = within_cutoff(idx.exponent(idx.key_of(0, k)), cutoff);
    const bool shifted_in = within_cutoff(idx.exponent(idx.key_of(1, k)), cutoff);
    if (!integer_in && !shifted_in) break;
    if (k >= 1 && integer_in) out.add_at(0, k, 1.0);
    if (shifted_in) out.add_at(1, k, 1.0);
  }
  return out.build();
}

FdeProblem example_equation_problem(double alpha, double base, double y_at_base, double cutoff) {
  require_unit_alpha(alpha, "example_equation_problem");
  return FdeProblem({{alpha, 2.0 * alpha, 1.0}, {0.0, alpha, -1.0}},
                    example_equation_rhs(alpha, base, cutoff), y_at_base);
}

FracSeries solve_example_equation(double alpha, double base, double y_at_base, double cutoff) {
  require_unit_alpha(alpha, "solve_example_equation");
  const IndexPair idx = IndexPair::two(alpha, 1.0, base);
  auto e = [&](std::int64_t m, std::int64_t n) { return idx.exponent(idx.key_of(m, n)); };

  SeriesBuilder out(idx, cutoff);
  out.add_at(0, 0, y_at_base);
  for (std::int64_t n = 0; within_cutoff(e(1, n), cutoff); ++n) {
    if (n >= 1) {
      const double inv = gamma_ratio(e(1, n), e(-1, n)) - gamma_ratio(e(1, n), e(0, n));
      out.add_at(1, n, 1.0 / inv);
    }
    if (within_cutoff(e(2, n), cutoff)) {
      const double inv = gamma_ratio(e(2, n), e(0, n)) - gamma_ratio(e(2, n), e(1, n));
      out.add_at(2, n, 1.0 / inv);
    }
  }
  return out.build();
}

FdeProblem linear_fde_problem(double alpha, double beta, std::span<const double> f,
                              std::span<const double> g, double y_at_base, double cutoff,
                              double base) {
  const IndexPair idx = IndexPair::two(alpha, beta, base);
  SeriesBuilder rhs(idx, cutoff);
  for (std::size_t n = 0; n < g.size(); ++n) rhs.add_at(0, static_cast<std::int64_t>(n), g[n]);

  std::vector<OperatorTerm> terms{{0.0, alpha, 1.0}};
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] != 0.0) terms.push_back({static_cast<double>(j) * beta, 0.0, f[j]});
  }
  return FdeProblem(std::move(terms), rhs.build(), y_at_base);
}

Solution solve_linear_fde(double alpha, double beta, std::span<const double> f,
                          std::span<const double> g, double y_at_base, double cutoff,
                          double base) {
  require_unit_alpha(alpha, "solve_linear_fde");
  const IndexPair idx = IndexPair::two(alpha, beta, base);
  auto e = [&](std::int64_t m, std::int64_t n) { return idx.exponent(idx.key_of(m, n)); };

  Solution sol{FracSeries(idx, cutoff), {}};
  if (at(g, 1) != 0.0 && !(alpha < beta && beta < 2.0 * alpha)) {
    sol.warnings.push_back("g_1 != 0 but beta is outside (alpha, 2 alpha); y need not be 2-alpha "
                           "fractionally differentiable");
  }

  const double f0 = at(f, 0);
  const double c00 = y_at_base;
  SeriesBuilder out(idx, cutoff);
  out.add_at(0, 0, c00);
  double c10 = 0.0;
  for (std::int64_t n = 0; within_cutoff(e(1, n), cutoff); ++n) {
    const auto un = static_cast<std::size_t>(n);
    const double c1n = gamma_ratio(e(0, n), e(1, n)) * (at(g, un) - at(f, un) * c00);
    if (n == 0) c10 = c1n;
    out.add_at(1, n, c1n);

    double prev = -gamma_ratio(e(1, n), e(2, n)) * (at(f, un) * c10 + f0 * c1n);
    for (std::int64_t m = 2; within_cutoff(e(m, n), cutoff); ++m) {
      if (m >= 3) prev = -f0 * gamma_ratio(e(m - 1, n), e(m, n)) * prev;
      if (prev == 0.0) break;
      out.add_at(m, n, prev);
    }
  }
  sol.series = out.build();
  return sol;
}

Solution solve_by_ansatz(const FdeProblem& problem, double cutoff) {
  const IndexPair& idx = problem.indices();
  require_unit_alpha(idx.alpha(), "solve_by_ansatz");
  if (std::none_of(problem.terms().begin(), problem.terms().end(),
                   [](const OperatorTerm& t) { return t.order > 0.0; })) {
    throw DomainError("solve_by_ansatz: no term differentiates the unknown");
  }

  // Net exponent shift of every term; the smallest one selects the pivot equation.
  std::vector<ExponentKey> net;
  for (const OperatorTerm& t : problem.terms()) {
    net.push_back(lattice_or_zero(idx, t.shift, "shift") - lattice_or_zero(idx, t.order, "order"));
  }
  const ExponentKey lowest = *std::min_element(net.begin(), net.end(), [&](auto a, auto b) {
    return idx.exponent(a) < idx.exponent(b);
  });
  const double lowest_shift = idx.exponent(lowest);
  const double limit = std::min(cutoff, problem.rhs().cutoff() - lowest_shift);

  // Unknowns: mα + nβ <= limit, deduplicated on normalized lattices.
  std::set<ExponentKey> keys;
  const auto n_max = idx.beta() ? static_cast<std::int64_t>(std::floor(limit / *idx.beta())) : 0;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    for (std::int64_t m = 0;; ++m) {
      const ExponentKey k = idx.key_of(m, n);
      if (!within_cutoff(idx.exponent(k), limit)) break;
      keys.insert(k);
    }
  }
  std::vector<ExponentKey> unknowns(keys.begin(), keys.end());
  std::sort(unknowns.begin(), unknowns.end(), [&](auto a, auto b) {
    const double ea = idx.exponent(a), eb = idx.exponent(b);
    return ea != eb ? ea < eb : a < b;
  });

  Solution sol{FracSeries(idx, limit), {}};
  std::map<ExponentKey, double> known;  // contributions of solved unknowns
  std::map<ExponentKey, double> scale_of;
  SeriesBuilder out(idx, limit);
  constexpr double kInfinity = std::numeric_limits<double>::infinity();

  for (const ExponentKey mu : unknowns) {
    const FracSeries monomial(idx, kInfinity, {{mu, 1.0}});
    std::vector<double> weight(problem.terms().size());
    double pivot = 0.0, pivot_mag = 0.0;
    for (std::size_t i = 0; i < problem.terms().size(); ++i) {
      weight[i] = apply_term(problem.terms()[i], monomial).coefficient(mu + net[i]);
      if (net[i] == lowest) {
        pivot += weight[i];
        pivot_mag = std::max(pivot_mag, std::abs(weight[i]));
      }
    }
    const ExponentKey nu = mu + lowest;
    const double rhs = problem.rhs().coefficient(nu);
    const double target = rhs - known[nu];
    const double eq_scale = std::max({std::abs(rhs), scale_of[nu], std::abs(target)});
    const bool constant = mu == ExponentKey{};

    double c = 0.0;
    if (std::abs(pivot) <= 1e-13 * pivot_mag || pivot == 0.0) {
      if (std::abs(target) > kResidualTolerance * eq_scale) {
        throw NoSeriesSolution("no series solution: equation at exponent " +
                               describe(idx.exponent(nu)) + " cannot be matched (zero pivot for " +
                               "exponent " + describe(idx.exponent(mu)) + ")");
      }
      if (constant) {
        c = problem.initial_value();
      } else {
        sol.warnings.push_back("free coefficient at exponent " + describe(idx.exponent(mu)) +
                               " set to 0");
      }
    } else {
      c = target / pivot;
      if (constant && c != problem.initial_value()) {
        sol.warnings.push_back("operator does not annihilate constants; y(a) = " + describe(c) +
                               " is fixed by the equation, initial value ignored");
      }
    }
    if (c == 0.0) continue;
    out.add(mu, c);
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (weight[i] == 0.0) continue;
      const ExponentKey image = mu + net[i];
      known[image] += c * weight[i];
      scale_of[image] = std::max(scale_of[image], std::abs(c * weight[i]));
    }
  }
  sol.series = out.build();

  const ResidualReport check = assemble_residual(problem, sol.series);
  for (const OrderResidual& o : check.orders()) {
    if (o.relative() > kResidualTolerance) {
      throw NoSeriesSolution("no series solution: residual " + describe(o.residual) +
                             " at exponent " + describe(o.exponent) +
                             " cannot be removed by the two-index ansatz");
    }
  }
  return sol;
}

}  // namespace frac

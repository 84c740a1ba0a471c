#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frac/residual.hpp"
#include "frac/series.hpp"

namespace frac {

// ---------------------------------------------------------------------------
// N·α-differentiability

enum class Differentiability { infinite, finite };

/// How many times D^α can be applied to a series before it turns singular at
/// its base. The witness is the smallest exponent with a nonzero coefficient
/// that is not an integer multiple of α; finite(N) means
/// Nα < witness < (N+1)α.
struct DifferentiabilityReport {
  Differentiability classification = Differentiability::infinite;
  std::int64_t n_alpha = 0;
  std::optional<double> witness_exponent;
};

/// Throws DomainError for a series with negative exponents.
DifferentiabilityReport classify(const FracSeries& s);

// ---------------------------------------------------------------------------
// Linear fractional differential equations

/// coefficient · (x-a)^shift · D(order) applied to the unknown. An order that
/// is an integer multiple kα means D^α applied k times; 0 is the identity;
/// any other lattice order is a single Caputo derivative of that order.
struct OperatorTerm {
  double shift = 0.0;
  double order = 0.0;
  double coefficient = 1.0;
};

/// Σ_i term_i[y] = rhs, with y(a) = initial_value fixing the constant term
/// when the operator annihilates constants. The unknown lives on the rhs'
/// index pair.
class FdeProblem {
 public:
  /// Throws LatticeError if a shift or order is off the rhs' lattice.
  FdeProblem(std::vector<OperatorTerm> terms, FracSeries rhs, double initial_value);

  const IndexPair& indices() const { return rhs_.indices(); }
  const std::vector<OperatorTerm>& terms() const { return terms_; }
  const FracSeries& rhs() const { return rhs_; }
  double initial_value() const { return initial_value_; }

 private:
  std::vector<OperatorTerm> terms_;
  FracSeries rhs_;
  double initial_value_;
};

/// One operator term applied to y through the series operators.
FracSeries apply_term(const OperatorTerm& term, const FracSeries& y);

/// Substitutes candidate into the problem: parts are every term applied to
/// the candidate and -rhs. Throws IncompatibleError on a lattice mismatch.
ResidualReport assemble_residual(const FdeProblem& problem, const FracSeries& candidate);

struct Solution {
  FracSeries series;
  std::vector<std::string> warnings;
};

/// (x-a+(x-a)^α)/(1-x+a) = Σ_{k>=1}(x-a)^k + Σ_{k>=0}(x-a)^{k+α}, through cutoff.
FracSeries example_equation_rhs(double alpha, double base, double cutoff);

/// (x-a)^α (D^α)² f - D^α f = (x-a+(x-a)^α)/(1-x+a) as an FdeProblem.
FdeProblem example_equation_problem(double alpha, double base, double y_at_base, double cutoff);

/// Closed-form solution of the equation above, 0 < alpha < 1, β = 1:
///   c_00 = y(a),  c_0n = 0 (n >= 1),  c_10 = 0,  c_mn = 0 (m >= 3),
///   1/c_1n = Γ(n+α+1)/Γ(n-α+1) - Γ(n+α+1)/Γ(n+1)      (n >= 1),
///   1/c_2n = Γ(n+2α+1)/Γ(n+1) - Γ(n+2α+1)/Γ(n+α+1).
FracSeries solve_example_equation(double alpha, double base, double y_at_base, double cutoff);

/// D^α y + f y = g with f = Σ f_n (x-a)^{nβ}, g = Σ g_n (x-a)^{nβ}.
FdeProblem linear_fde_problem(double alpha, double beta, std::span<const double> f,
                              std::span<const double> g, double y_at_base, double cutoff,
                              double base = 0.0);

/// Closed-form recurrence for D^α y + f y = g:
///   c_00 = y(a),  c_0n = 0 (n >= 1),
///   c_1n = Γ(nβ+1)/Γ(α+nβ+1) (g_n - f_n c_00),
///   c_2n = -Γ(α+nβ+1)/Γ(2α+nβ+1) (f_n c_10 + f_0 c_1n),
///   c_mn = -f_0 Γ((m-1)α+nβ+1)/Γ(mα+nβ+1) c_(m-1)n   (m >= 3).
/// With f_0 = 1 this is the standard three-line recurrence, n = 0 included.
/// Substitution gives c_(m+1)n Γ((m+1)α+nβ+1)/Γ(mα+nβ+1) = -Σ_j f_j c_m(n-j);
/// the recurrence keeps only the j = n and j = 0 terms, and at n = 0 these
/// are the same term counted twice. It is exact for f ≡ 0 and in general
/// leaves a residual at orders mα+nβ, m >= 1; check it with assemble_residual(). A warning
/// is recorded when g_1 != 0 and β lies outside (α, 2α).
Solution solve_linear_fde(double alpha, double beta, std::span<const double> f,
                          std::span<const double> g, double y_at_base, double cutoff,
                          double base = 0.0);

/// Coefficient matching for a linear problem, 0 < α < 1.
///
/// Unknowns are the lattice exponents mα+nβ (m, n >= 0) up to the cutoff,
/// processed in canonical order. Each unknown is fixed by the equation at
/// its lowest image exponent μ + d*, d* = min_i(shift_i - order_i); earlier
/// unknowns are already known there, so the system is triangular. A zero
/// pivot leaves the unknown free: c_00 takes the initial value, any other
/// free coefficient is set to 0 with a warning. Throws NoSeriesSolution
/// naming the exponent of an inconsistent equation, including any found by
/// the final residual check.
Solution solve_by_ansatz(const FdeProblem& problem, double cutoff);

}  // namespace frac

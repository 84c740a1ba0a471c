#pragma once

// Self-check suites behind `frac verify`. Each returns a Report whose
// checks carry the tolerance they were judged against.

#include <cstddef>
#include <cstdint>
#include <span>

#include "frac/report.hpp"

namespace frac {

/// Reciprocity, recurrence, integer factorial ratios, pole-zero rule and
/// reference values of the gamma kernel.
Report verify_gamma_suite(std::uint64_t seed = 20240611);

/// L1 quadrature against the power rule for β ∈ {0.8, 1, 1.5, 2.3} and
/// α ∈ {0.3, 0.5, 0.7} at `grid` subintervals (tolerance 1e-3), plus the
/// empirical convergence order on ξ² over three doublings ending at `grid`
/// (within 20% of 2-α).
Report verify_power_rule_suite(std::size_t grid = 8192);

/// Inverse-pair identities: coefficient-wise on random two-index series
/// (1e-12) and by nested quadrature on ξ, ξ^1.5, ξ² (1e-2 at `grid`) for
/// each α in `alphas` (empty: 0.3, 0.5, 0.7).
Report verify_ftfc_suite(std::size_t grid = 2048, std::uint64_t seed = 20240611,
                         std::span<const double> alphas = {});

}  // namespace frac

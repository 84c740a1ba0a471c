#pragma once

// Interchange formats: series JSON, problem JSON, report JSON and the
// `m,n,exponent,coefficient` CSV table.

#include <string>

#include "json.hpp"

#include "frac/fde.hpp"
#include "frac/report.hpp"
#include "frac/series.hpp"

namespace frac {

/// {"alpha":…, "beta":…, "base":…, "side":"right", "cutoff":…,
///  "terms":[{"m":0,"n":0,"c":1.0}, …]}; beta is omitted for single-index
/// series, terms in canonical order.
nlohmann::json series_to_json(const FracSeries& s);
/// Terms that share a lattice key are summed. Throws DomainError on
/// malformed input.
FracSeries series_from_json(const nlohmann::json& j);

/// {"alpha":…, "beta":…, "base":…, "terms":[{"shift","order","coeff"}],
///  "rhs":{series}, "y0":…}. The rhs must use the problem's alpha, beta and base.
nlohmann::json problem_to_json(const FdeProblem& p);
FdeProblem problem_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);
nlohmann::json residual_to_json(const ResidualReport& r);

/// Header `m,n,exponent,coefficient`, one row per term in canonical order.
std::string series_to_csv(const FracSeries& s);

/// Shortest decimal that parses back to the same double.
std::string shortest(double v);

}  // namespace frac

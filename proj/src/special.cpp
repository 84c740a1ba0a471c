#include "frac/special.hpp"

#include <bit>
#include <cmath>
#include <mutex>

#include "frac/error.hpp"
#include "frac/gamma.hpp"

namespace frac {
namespace {

void require_alpha(double alpha, const char* what) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError(std::string(what) + ": alpha must be positive");
  }
}

void extend(std::vector<double>& values, double a, double alpha, std::size_t k) {
  if (values.empty()) values = {1.0, a};
  while (values.size() <= k) {
    const double j = static_cast<double>(values.size());
    const double factor = a + gamma_ratio((j - 1.0) * alpha, (j - 2.0) * alpha);
    values.push_back(values.back() * factor);
  }
}

// Single-index series Σ weight(m, mα)·(x-a)^{mα} over mα <= cutoff.
template <class Weight>
FracSeries power_series(double alpha, double base, double cutoff, Weight weight) {
  const IndexPair idx = IndexPair::single(alpha, base);
  SeriesBuilder out(idx, cutoff);
  for (std::int64_t m = 0;; ++m) {
    const ExponentKey key = idx.key_of(m);
    const double e = idx.exponent(key);
    if (!within_cutoff(e, cutoff)) break;
    const double w = weight(m, e);
    if (w != 0.0) out.add(key, w);
  }
  return out.build();
}

}  // namespace

PochhammerTable::PochhammerTable(double a, double alpha) : a_(a), alpha_(alpha) {
  require_alpha(alpha, "PochhammerTable");
  values_ = {1.0, a};
}

double PochhammerTable::operator[](std::size_t k) {
  extend(values_, a_, alpha_, k);
  return values_[k];
}

double PochhammerCache::value(double a, double alpha, std::size_t k) {
  const auto key = std::make_pair(std::bit_cast<std::uint64_t>(a), std::bit_cast<std::uint64_t>(alpha));
  {
    std::shared_lock lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second.size() > k) return it->second[k];
  }
  std::unique_lock lock(mutex_);
  auto& values = tables_[key];
  extend(values, a, alpha, k);
  return values[k];
}

double frac_pochhammer(double a, double alpha, std::size_t k) {
  require_alpha(alpha, "frac_pochhammer");
  static PochhammerCache cache;
  return cache.value(a, alpha, k);
}

FracSeries mittag_leffler_series(double alpha, double base, double cutoff) {
  require_alpha(alpha, "mittag_leffler_series");
  return power_series(alpha, base, cutoff,
                      [](std::int64_t, double e) { return reciprocal_gamma(e + 1.0); });
}

double mittag_leffler_eval(double alpha, double z, double tol) {
  require_alpha(alpha, "mittag_leffler_eval");
  if (!(tol > 0.0)) throw DomainError("mittag_leffler_eval: tol must be positive");
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("mittag_leffler_eval: z must be a finite non-negative real");
  }
  if (z == 0.0) return 1.0;

  constexpr std::size_t kMaxTerms = 1'000'000;
  const double log_z = std::log(z);
  const double floor_k = std::ceil(std::pow(z, 1.0 / alpha) / alpha);
  double sum = 0.0;
  double previous = INFINITY;
  for (std::size_t k = 0; k <= kMaxTerms; ++k) {
    const double kd = static_cast<double>(k);
    const double term = k == 0 ? 1.0 : std::exp(kd * log_z - log_gamma(kd * alpha + 1.0));
    if (kd >= floor_k && term < previous && term < tol * std::abs(sum)) return sum;
    sum += term;
    previous = term;
  }
  throw NonConvergence("mittag_leffler_eval: no convergence within 10^6 terms");
}

FracSeries frac_exp_series(double alpha, double base, double cutoff) {
  require_alpha(alpha, "frac_exp_series");
  return power_series(alpha, base, cutoff, [](std::int64_t m, double) {
    return reciprocal_gamma(static_cast<double>(m) + 1.0);
  });
}

FracSeries frac_sin_series(double alpha, double base, double cutoff) {
  require_alpha(alpha, "frac_sin_series");
  return power_series(alpha, base, cutoff, [](std::int64_t m, double e) {
    if (m % 2 == 0) return 0.0;
    const double sign = ((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * reciprocal_gamma(e + 1.0);
  });
}

FracSeries frac_cos_series(double alpha, double base, double cutoff) {
  require_alpha(alpha, "frac_cos_series");
  return power_series(alpha, base, cutoff, [](std::int64_t m, double e) {
    if (m % 2 != 0) return 0.0;
    const double sign = (m / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * reciprocal_gamma(e + 1.0);
  });
}

}  // namespace frac

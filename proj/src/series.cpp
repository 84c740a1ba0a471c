#include "frac/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frac/error.hpp"
#include "frac/gamma.hpp"

namespace frac {
namespace {

bool canonical_less(const Term& a, const Term& b) {
  if (a.exponent != b.exponent) return a.exponent < b.exponent;
  return a.key < b.key;
}

ExponentKey require_lattice(const IndexPair& idx, double order, const char* what) {
  auto key = idx.lattice_key(order);
  if (!key) {
    throw LatticeError(std::string(what) + ": order " + std::to_string(order) +
                       " is not on the exponent lattice of the series");
  }
  return *key;
}

void require_positive_order(double order, const char* what) {
  if (!std::isfinite(order) || order <= 0.0) {
    throw DomainError(std::string(what) + ": order must be positive");
  }
}

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

bool within_cutoff(double exponent, double cutoff) {
  return exponent <= cutoff + 1e-12 * std::max(1.0, std::abs(cutoff));
}

FracSeries::FracSeries(IndexPair indices, double cutoff,
                       const std::map<ExponentKey, double>& terms, std::size_t dropped)
    : indices_(indices), cutoff_(cutoff), dropped_(dropped) {
  if (std::isnan(cutoff)) throw DomainError("series cutoff is NaN");
  terms_.reserve(terms.size());
  for (const auto& [key, c] : terms) {
    if (!indices_.beta() && key.n != 0) {
      throw DomainError("single-index series cannot hold a beta component");
    }
    if (!std::isfinite(c)) throw DomainError("series coefficient is not finite");
    if (c == 0.0) continue;
    const double e = indices_.exponent(key);
    if (!within_cutoff(e, cutoff_)) {
      throw DomainError("term exponent " + std::to_string(e) + " exceeds cutoff " +
                        std::to_string(cutoff_));
    }
    terms_.push_back({key, e, c});
  }
  std::sort(terms_.begin(), terms_.end(), canonical_less);
}

bool FracSeries::singular_at_base() const {
  return !terms_.empty() && terms_.front().exponent < 0.0;
}

double FracSeries::coefficient(ExponentKey key) const {
  const Term probe{key, indices_.exponent(key), 0.0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, canonical_less);
  return (it != terms_.end() && it->key == key) ? it->coefficient : 0.0;
}

FracSeries FracSeries::rebased(double base) const {
  FracSeries copy = *this;
  copy.indices_ = indices_.with_base(base);
  return copy;
}

SeriesBuilder& SeriesBuilder::add(ExponentKey key, double coefficient) {
  terms_[key] += coefficient;
  return *this;
}

FracSeries SeriesBuilder::build() const {
  std::map<ExponentKey, double> kept;
  std::size_t dropped = dropped_;
  for (const auto& [key, c] : terms_) {
    if (c == 0.0) continue;
    if (!within_cutoff(indices_.exponent(key), cutoff_)) {
      ++dropped;
      continue;
    }
    kept.emplace(key, c);
  }
  return FracSeries(indices_, cutoff_, kept, dropped);
}

FracSeries caputo_derivative(const FracSeries& s, double order) {
  require_positive_order(order, "caputo_derivative");
  const IndexPair& idx = s.indices();
  const ExponentKey shift = require_lattice(idx, order, "caputo_derivative");
  const double exact_order = idx.exponent(shift);
  // Integer powers below ⌈order⌉ are killed by the integer-order derivative
  // inside the Caputo definition.
  const double kill_limit = std::ceil(exact_order) - 1.0;

  SeriesBuilder out(idx, s.cutoff() - exact_order);
  out.count_dropped(s.dropped());
  for (const Term& t : s.terms()) {
    if (is_integer(t.exponent) && t.exponent >= 0.0 && t.exponent <= kill_limit) continue;
    if (is_gamma_pole(t.exponent + 1.0)) {
      throw DomainError("caputo_derivative: term with exponent " + std::to_string(t.exponent) +
                        " has no fractional derivative");
    }
    const ExponentKey key = t.key - shift;
    out.add(key, t.coefficient * gamma_ratio(t.exponent, idx.exponent(key)));
  }
  return out.build();
}

FracSeries rl_integral(const FracSeries& s, double order) {
  require_positive_order(order, "rl_integral");
  const IndexPair& idx = s.indices();
  const ExponentKey shift = require_lattice(idx, order, "rl_integral");

  SeriesBuilder out(idx, s.cutoff());
  out.count_dropped(s.dropped());
  for (const Term& t : s.terms()) {
    if (t.exponent <= -1.0) {
      throw DomainError("rl_integral: exponent " + std::to_string(t.exponent) +
                        " is not integrable at the base");
    }
    const ExponentKey key = t.key + shift;
    out.add(key, t.coefficient * gamma_ratio(t.exponent, idx.exponent(key)));
  }
  return out.build();
}

FracSeries multiply_by_power(const FracSeries& s, double power) {
  if (!std::isfinite(power) || power < 0.0) {
    throw DomainError("multiply_by_power: power must be non-negative");
  }
  if (power == 0.0) return s;
  const ExponentKey shift = require_lattice(s.indices(), power, "multiply_by_power");
  SeriesBuilder out(s.indices(), s.cutoff());
  out.count_dropped(s.dropped());
  for (const Term& t : s.terms()) out.add(t.key + shift, t.coefficient);
  return out.build();
}

FracSeries add(const FracSeries& a, const FracSeries& b) {
  if (!(a.indices() == b.indices())) {
    throw IncompatibleError("add: series are built over different index pairs");
  }
  SeriesBuilder out(a.indices(), std::min(a.cutoff(), b.cutoff()));
  out.count_dropped(a.dropped() + b.dropped());
  for (const Term& t : a.terms()) out.add(t.key, t.coefficient);
  for (const Term& t : b.terms()) out.add(t.key, t.coefficient);
  return out.build();
}

FracSeries scale(const FracSeries& s, double k) {
  if (!std::isfinite(k)) throw DomainError("scale: factor is not finite");
  SeriesBuilder out(s.indices(), s.cutoff());
  out.count_dropped(s.dropped());
  for (const Term& t : s.terms()) out.add(t.key, k * t.coefficient);
  return out.build();
}

FracSeries subtract(const FracSeries& a, const FracSeries& b) { return add(a, scale(b, -1.0)); }

Evaluation evaluate(const FracSeries& s, double x, double tail_tol) {
  const IndexPair& idx = s.indices();
  const double t = idx.side() == Side::right ? x - idx.base() : idx.base() - x;
  if (!(t >= 0.0)) {
    throw DomainError("evaluate: x = " + std::to_string(x) + " lies outside the " +
                      std::string(to_string(idx.side())) + " neighbourhood of the base");
  }
  if (t == 0.0 && s.singular_at_base()) {
    throw SingularityError("evaluate: series is singular at its base point");
  }
  Evaluation ev;
  for (const Term& term : s.terms()) {
    // pow(0, 0) == 1 and pow(0, μ > 0) == 0.
    const double v = term.coefficient * std::pow(t, term.exponent);
    ev.value += v;
    ev.tail_estimate = std::abs(v);
  }
  ev.tail_within_tolerance = ev.tail_estimate <= tail_tol;
  return ev;
}

FracSeries fractional_taylor(std::span<const double> derivative_values, const IndexPair& indices) {
  if (indices.beta()) throw DomainError("fractional_taylor: expects a single-index pair");
  if (indices.side() != Side::right) {
    throw DomainError("fractional_taylor: builds right series; use mirror() for the left form");
  }
  const auto top = derivative_values.empty() ? 0 : derivative_values.size() - 1;
  SeriesBuilder out(indices, static_cast<double>(top) * indices.alpha());
  for (std::size_t m = 0; m < derivative_values.size(); ++m) {
    const ExponentKey key = indices.key_of(static_cast<std::int64_t>(m));
    out.add(key, derivative_values[m] * reciprocal_gamma(indices.exponent(key) + 1.0));
  }
  return out.build();
}

FracSeries mirror(const FracSeries& s) {
  const IndexPair flipped =
      s.indices().with_side(s.indices().side() == Side::right ? Side::left : Side::right);
  std::map<ExponentKey, double> terms;
  for (const Term& t : s.terms()) terms.emplace(t.key, t.coefficient);
  return FracSeries(flipped, s.cutoff(), terms, s.dropped());
}

double max_relative_difference(const FracSeries& a, const FracSeries& b, double through) {
  std::map<ExponentKey, std::pair<double, double>> joined;
  for (const Term& t : a.terms()) {
    if (within_cutoff(t.exponent, through)) joined[t.key].first = t.coefficient;
  }
  for (const Term& t : b.terms()) {
    if (within_cutoff(t.exponent, through)) joined[t.key].second = t.coefficient;
  }
  double worst = 0.0;
  for (const auto& [key, pair] : joined) {
    const double diff = std::abs(pair.first - pair.second);
    const double mag = std::max(std::abs(pair.first), std::abs(pair.second));
    worst = std::max(worst, mag > 1e-300 ? diff / mag : diff);
  }
  return worst;
}

}  // namespace frac

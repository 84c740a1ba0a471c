#include "frac/lattice.hpp"

#include <cmath>
#include <string>

#include "frac/error.hpp"

namespace frac {
namespace {

constexpr double kLatticeTolerance = 1e-12;

bool close(double a, double b) {
  return std::abs(a - b) <= kLatticeTolerance * std::max(1.0, std::abs(b));
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t modular_inverse(std::int64_t a, std::int64_t m) {
  // Extended Euclid; gcd(a, m) == 1 by construction of the reduced fraction.
  std::int64_t old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  return floor_mod(old_s, m);
}

void require_index(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string("fractional index ") + name + " must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::right ? "right" : "left"; }

Side side_from_string(std::string_view name) {
  if (name == "right") return Side::right;
  if (name == "left") return Side::left;
  throw DomainError("unknown side '" + std::string(name) + "'");
}

double snap_integer(double v) {
  const double r = std::round(v);
  return close(v, r) ? r : v;
}

std::optional<std::pair<std::int64_t, std::int64_t>> rational_approximation(
    double r, std::int64_t max_den, double tol) {
  if (!std::isfinite(r) || r <= 0.0) return std::nullopt;
  // Convergents h_k / k_k of the continued fraction of r.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(r));
  std::int64_t k_prev = 0, k = 1;
  double frac_part = r - std::floor(r);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(r - static_cast<double>(h) / static_cast<double>(k)) <= tol * r) {
      return std::make_pair(h, k);
    }
    if (frac_part < 1e-18) break;
    const double inv = 1.0 / frac_part;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac_part = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

IndexPair IndexPair::single(double alpha, double base, Side side) {
  require_index(alpha, "alpha");
  IndexPair p;
  p.alpha_ = alpha;
  p.base_ = base;
  p.side_ = side;
  return p;
}

IndexPair IndexPair::two(double alpha, double beta, double base, Side side) {
  require_index(alpha, "alpha");
  require_index(beta, "beta");
  IndexPair p;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.base_ = base;
  p.side_ = side;
  if (auto frac = rational_approximation(beta / alpha, kMaxDenominator, kRationalTolerance)) {
    p.beta_units_ = frac->first;
    p.alpha_units_ = frac->second;
    p.beta_inverse_ = p.alpha_units_ == 1 ? 0 : modular_inverse(p.beta_units_, p.alpha_units_);
  } else {
    p.independent_ = true;
  }
  return p;
}

ExponentKey IndexPair::key_of(std::int64_t m, std::int64_t n) const {
  if (independent_) return {m, n};
  if (!beta_ && n != 0) {
    throw DomainError("key_of: single-index series has no beta component");
  }
  return {alpha_units_ * m + beta_units_ * n, 0};
}

std::pair<std::int64_t, std::int64_t> IndexPair::labels(ExponentKey key) const {
  if (independent_ || !beta_) return {key.m, key.n};
  const std::int64_t q = alpha_units_;
  const std::int64_t p = beta_units_;
  const std::int64_t n = q == 1 ? 0 : floor_mod(floor_mod(key.m, q) * beta_inverse_, q);
  return {(key.m - p * n) / q, n};
}

double IndexPair::exponent(ExponentKey key) const {
  const auto [m, n] = labels(key);
  double v = static_cast<double>(m) * alpha_;
  if (n != 0) v += static_cast<double>(n) * *beta_;
  return snap_integer(v);
}

std::optional<ExponentKey> IndexPair::lattice_key(double value) const {
  if (!std::isfinite(value) || value < 0.0) return std::nullopt;
  if (!beta_) {
    const double m = std::round(value / alpha_);
    if (m >= 0.0 && close(m * alpha_, value)) return ExponentKey{static_cast<std::int64_t>(m), 0};
    return std::nullopt;
  }
  if (independent_) {
    const auto n_max = static_cast<std::int64_t>(std::floor(value / *beta_)) + 1;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const double rest = value - static_cast<double>(n) * *beta_;
      const double m = std::round(rest / alpha_);
      if (m < 0.0) continue;
      if (close(m * alpha_ + static_cast<double>(n) * *beta_, value)) {
        return ExponentKey{static_cast<std::int64_t>(m), n};
      }
    }
    return std::nullopt;
  }
  const double unit = alpha_ / static_cast<double>(alpha_units_);
  const ExponentKey key{static_cast<std::int64_t>(std::round(value / unit)), 0};
  if (!close(exponent(key), value)) return std::nullopt;
  if (labels(key).first < 0) return std::nullopt;  // needs a negative multiple of α
  return key;
}

bool IndexPair::is_alpha_multiple(ExponentKey key) const {
  if (independent_) return key.n == 0;
  return floor_mod(key.m, alpha_units_) == 0;
}

IndexPair IndexPair::with_side(Side side) const {
  IndexPair p = *this;
  p.side_ = side;
  return p;
}

IndexPair IndexPair::with_base(double base) const {
  IndexPair p = *this;
  p.base_ = base;
  return p;
}

}  // namespace frac

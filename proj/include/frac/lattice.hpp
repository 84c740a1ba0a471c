#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace frac {

enum class Side {
  right,  ///< expansion at the lower endpoint a, basis (x-a)^μ
  left,   ///< expansion at the upper endpoint b, basis (b-x)^μ
};

std::string_view to_string(Side side);
Side side_from_string(std::string_view name);

/// Integer coordinates of an exponent on the lattice spanned by the series'
/// units. Components may be negative: a Caputo derivative can move a term
/// below a generator (e.g. x^β ↦ x^{β-α}).
struct ExponentKey {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const ExponentKey&, const ExponentKey&) = default;
  friend ExponentKey operator+(ExponentKey a, ExponentKey b) { return {a.m + b.m, a.n + b.n}; }
  friend ExponentKey operator-(ExponentKey a, ExponentKey b) { return {a.m - b.m, a.n - b.n}; }
};

/// The fractional indices α (and optionally β) of a series, its base point
/// and its side.
///
/// When β/α is a rational p/q with q <= kMaxDenominator (detected to 1e-12),
/// the pair is stored over a single unit α/q so that every exponent has one
/// key: α is q units and β is p units. Otherwise, with β present, keys are
/// the (m, n) of mα + nβ directly. Callers always address terms through the
/// original (m, n) via key_of(); labels() maps a stored key back to a
/// canonical (m, n).
class IndexPair {
 public:
  static constexpr std::int64_t kMaxDenominator = 1000;
  static constexpr double kRationalTolerance = 1e-12;

  /// Single-index pair: exponents mα.
  static IndexPair single(double alpha, double base = 0.0, Side side = Side::right);
  /// Two-index pair: exponents mα + nβ.
  static IndexPair two(double alpha, double beta, double base = 0.0, Side side = Side::right);

  double alpha() const { return alpha_; }
  std::optional<double> beta() const { return beta_; }
  double base() const { return base_; }
  Side side() const { return side_; }

  /// True if α and β are stored as independent generators.
  bool independent() const { return independent_; }
  /// q and p of β/α = p/q when the pair was normalized (q = 1, p = 0 for single).
  std::int64_t alpha_units() const { return alpha_units_; }
  std::int64_t beta_units() const { return beta_units_; }

  /// Key of the monomial (x-a)^{mα+nβ}. n must be 0 for a single-index pair.
  ExponentKey key_of(std::int64_t m, std::int64_t n = 0) const;
  ExponentKey alpha_key() const { return key_of(1, 0); }

  /// Canonical (m, n) with exponent mα + nβ for a stored key.
  std::pair<std::int64_t, std::int64_t> labels(ExponentKey key) const;

  /// Exponent value of a key. Values within 1e-12 of an integer are returned
  /// as that integer, so pole and Caputo-kernel tests are exact.
  double exponent(ExponentKey key) const;

  /// Key of value = m'α + n'β with m', n' >= 0, if one exists (1e-12 relative).
  std::optional<ExponentKey> lattice_key(double value) const;

  /// True if the exponent of key is an integer multiple of α.
  bool is_alpha_multiple(ExponentKey key) const;

  IndexPair with_side(Side side) const;
  IndexPair with_base(double base) const;

  friend bool operator==(const IndexPair& a, const IndexPair& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.base_ == b.base_ &&
           a.side_ == b.side_;
  }

 private:
  IndexPair() = default;

  double alpha_ = 1.0;
  std::optional<double> beta_;
  double base_ = 0.0;
  Side side_ = Side::right;
  bool independent_ = false;
  std::int64_t alpha_units_ = 1;  // q
  std::int64_t beta_units_ = 0;   // p
  std::int64_t beta_inverse_ = 0; // p^{-1} mod q
};

/// Continued-fraction search for p/q with q <= max_den and |r - p/q| <= tol·|r|.
std::optional<std::pair<std::int64_t, std::int64_t>> rational_approximation(
    double r, std::int64_t max_den, double tol);

/// Snap v to the nearest integer when within 1e-12·max(1,|v|).
double snap_integer(double v);

}  // namespace frac

#include <cmath>
#include <random>

#include "doctest.h"
#include "frac/error.hpp"
#include "frac/gamma.hpp"
#include "frac/series.hpp"

using namespace frac;

namespace {

FracSeries monomial(const IndexPair& idx, std::int64_t m, std::int64_t n, double c, double cutoff) {
  return SeriesBuilder(idx, cutoff).add_at(m, n, c).build();
}

FracSeries random_series(std::mt19937_64& rng, const IndexPair& idx, double cutoff) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SeriesBuilder b(idx, cutoff);
  for (int i = 0; i < 30; ++i) {
    b.add_at(static_cast<std::int64_t>(unit(rng) * 6), static_cast<std::int64_t>(unit(rng) * 3),
             2.0 * unit(rng) - 1.0);
  }
  return b.build();
}

}  // namespace

TEST_CASE("construction keeps canonical order and drops zeros") {
  const IndexPair idx = IndexPair::two(0.5, 0.7);
  SeriesBuilder b(idx, 2.0);
  b.add_at(2, 0, 1.0).add_at(0, 1, 2.0).add_at(0, 0, 3.0).add_at(1, 0, 0.0);
  b.add_at(0, 1, 1.0).add_at(5, 0, 9.0);
  const FracSeries s = b.build();
  REQUIRE(s.size() == 3);
  CHECK(s.terms()[0].exponent == 0.0);
  CHECK(s.terms()[1].exponent == doctest::Approx(0.7));
  CHECK(s.terms()[1].coefficient == 3.0);
  CHECK(s.terms()[2].exponent == 1.0);
  CHECK(s.dropped() == 1);
  CHECK(s.coefficient_at(1, 0) == 0.0);
  CHECK_THROWS_AS(FracSeries(idx, 0.5, {{idx.key_of(2, 0), 1.0}}), DomainError);
  CHECK_THROWS_AS(FracSeries(idx, 2.0, {{idx.key_of(0, 0), NAN}}), DomainError);
}

TEST_CASE("Caputo power rule") {
  const IndexPair idx = IndexPair::single(0.5);
  const FracSeries d = caputo_derivative(monomial(idx, 3, 0, 1.0, 4.0), 0.5);
  REQUIRE(d.size() == 1);
  CHECK(d.terms()[0].exponent == 1.0);
  CHECK(d.terms()[0].coefficient == doctest::Approx(1.3293403881791370205).epsilon(1e-14));
  CHECK(d.cutoff() == 3.5);

  SUBCASE("constants are annihilated") {
    CHECK(caputo_derivative(monomial(idx, 0, 0, 5.0, 2.0), 0.5).empty());
  }
  SUBCASE("x^alpha maps to Gamma(alpha+1)") {
    const FracSeries one = caputo_derivative(monomial(idx, 1, 0, 1.0, 2.0), 0.5);
    CHECK(one.coefficient_at(0) == doctest::Approx(std::tgamma(1.5)).epsilon(1e-14));
  }
  SUBCASE("(D^a)^2 x^a = 0 while D^{2a} x^a is not") {
    const FracSeries x_a = monomial(idx, 1, 0, 1.0, 3.0);
    CHECK(caputo_derivative(caputo_derivative(x_a, 0.5), 0.5).empty());
    const FracSeries d2 = caputo_derivative(x_a, 1.0);
    REQUIRE(d2.size() == 1);
    CHECK(d2.terms()[0].exponent == -0.5);
    CHECK(d2.singular_at_base());
  }
  SUBCASE("first-order Caputo is the classical derivative") {
    const FracSeries p = monomial(IndexPair::single(1.0), 3, 0, 2.0, 5.0);
    CHECK(caputo_derivative(p, 1.0).coefficient_at(2) == doctest::Approx(6.0));
    CHECK(caputo_derivative(monomial(IndexPair::single(1.0), 1, 0, 1.0, 5.0), 1.0).coefficient_at(0) == 1.0);
  }
  SUBCASE("order off the lattice") {
    CHECK_THROWS_AS(caputo_derivative(monomial(idx, 1, 0, 1.0, 3.0), 0.3), LatticeError);
  }
}

TEST_CASE("Riemann-Liouville power rule") {
  const IndexPair idx = IndexPair::single(0.5);
  const FracSeries i = rl_integral(monomial(idx, 0, 0, 1.0, 3.0), 0.5);
  CHECK(i.coefficient_at(1) == doctest::Approx(1.1283791670955125739).epsilon(1e-14));
  CHECK(i.cutoff() == 3.0);
  const FracSeries edge = rl_integral(monomial(idx, 6, 0, 1.0, 3.0), 0.5);
  CHECK(edge.empty());
  CHECK(edge.dropped() == 1);
  CHECK_THROWS_AS(rl_integral(monomial(idx, -2, 0, 1.0, 3.0), 0.5), DomainError);
  CHECK_THROWS_AS(rl_integral(monomial(idx, 1, 0, 1.0, 3.0), -0.5), DomainError);
}

TEST_CASE("inverse pair on random two-index series") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double alpha = 0.05 + 0.9 * unit(rng);
    const IndexPair idx = IndexPair::two(alpha, 0.05 + 1.9 * unit(rng));
    const FracSeries s = random_series(rng, idx, 8.0);
    const FracSeries di = caputo_derivative(rl_integral(s, alpha), alpha);
    CHECK(max_relative_difference(di, s, di.cutoff()) < 1e-12);
    const FracSeries id = rl_integral(caputo_derivative(s, alpha), alpha);
    const FracSeries c00(idx, s.cutoff(), {{ExponentKey{}, s.coefficient(ExponentKey{})}});
    CHECK(max_relative_difference(id, subtract(s, c00), id.cutoff()) < 1e-12);
  }
}

TEST_CASE("semigroup of integrals") {
  std::mt19937_64 rng(5);
  const IndexPair idx = IndexPair::two(0.3, 0.8);
  const FracSeries s = random_series(rng, idx, 10.0);
  const FracSeries twice = rl_integral(rl_integral(s, 0.3), 0.8);
  const FracSeries once = rl_integral(s, 1.1);
  CHECK(max_relative_difference(twice, once, 10.0) < 1e-13);
}

TEST_CASE("arithmetic") {
  const IndexPair idx = IndexPair::single(0.5);
  const FracSeries a = SeriesBuilder(idx, 3.0).add_at(0, 0, 1.0).add_at(1, 0, 2.0).build();
  const FracSeries b = SeriesBuilder(idx, 2.0).add_at(1, 0, -2.0).add_at(4, 0, 1.0).build();
  const FracSeries sum = add(a, b);
  CHECK(sum.cutoff() == 2.0);
  CHECK(sum.size() == 2);
  CHECK(sum.coefficient_at(1) == 0.0);
  CHECK(scale(a, 3.0).coefficient_at(1) == 6.0);
  CHECK(subtract(a, a).empty());
  const FracSeries shifted = multiply_by_power(a, 1.0);
  CHECK(shifted.coefficient_at(3) == 2.0);
  CHECK(shifted.cutoff() == 3.0);
  CHECK_THROWS_AS(add(a, FracSeries(IndexPair::single(0.25), 3.0)), IncompatibleError);
  CHECK_THROWS_AS(add(a, FracSeries(idx.with_base(1.0), 3.0)), IncompatibleError);
}

TEST_CASE("evaluate") {
  const IndexPair idx = IndexPair::single(0.5, 1.0);
  const FracSeries s = SeriesBuilder(idx, 3.0).add_at(0, 0, 1.0).add_at(1, 0, 2.0).add_at(2, 0, 3.0).build();
  const Evaluation e = evaluate(s, 5.0);
  CHECK(e.value == doctest::Approx(1.0 + 2.0 * 2.0 + 3.0 * 4.0));
  CHECK(e.tail_estimate == doctest::Approx(12.0));
  CHECK_THROWS_AS(evaluate(s, 0.5), DomainError);

  const FracSeries left = mirror(s);
  CHECK(left.indices().side() == Side::left);
  CHECK(evaluate(left, -3.0).value == doctest::Approx(e.value));
  CHECK_THROWS_AS(evaluate(left, 2.0), DomainError);

  const FracSeries singular = caputo_derivative(SeriesBuilder(idx, 3.0).add_at(1, 0, 1.0).build(), 1.0);
  CHECK_THROWS_AS(evaluate(singular, 1.0), SingularityError);
  CHECK(std::isfinite(evaluate(singular, 2.0).value));
}

TEST_CASE("fractional Taylor series") {
  const std::vector<double> d = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  const FracSeries s = fractional_taylor(d, IndexPair::single(0.5));
  CHECK(s.cutoff() == 2.5);
  for (std::int64_t m = 0; m <= 5; ++m) {
    CHECK(s.coefficient_at(m) == doctest::Approx(reciprocal_gamma(0.5 * m + 1.0)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(fractional_taylor(d, IndexPair::two(0.5, 0.7)), DomainError);
}

TEST_CASE("rebased keeps coefficients") {
  const FracSeries s = SeriesBuilder(IndexPair::single(0.5), 2.0).add_at(1, 0, 3.0).build();
  const FracSeries r = s.rebased(2.0);
  CHECK(r.indices().base() == 2.0);
  CHECK(r.coefficient_at(1) == 3.0);
}

#include <cmath>

#include "doctest.h"
#include "frac/error.hpp"
#include "frac/lattice.hpp"

using namespace frac;

TEST_CASE("rational_approximation") {
  auto r = rational_approximation(1.5, 1000, 1e-12);
  REQUIRE(r);
  CHECK(r->first == 3);
  CHECK(r->second == 2);
  r = rational_approximation(0.7 / 0.3, 1000, 1e-12);
  REQUIRE(r);
  CHECK(r->first == 7);
  CHECK(r->second == 3);
  CHECK_FALSE(rational_approximation(std::sqrt(2.0), 1000, 1e-12));
  CHECK_FALSE(rational_approximation(M_PI, 1000, 1e-12));
}

TEST_CASE("snap_integer") {
  CHECK(snap_integer(2.0000000000001) == 2.0);
  CHECK(snap_integer(-1.0 + 1e-14) == -1.0);
  CHECK(snap_integer(0.5) == 0.5);
  CHECK(snap_integer(2.001) == 2.001);
}

TEST_CASE("single-index pair") {
  const IndexPair idx = IndexPair::single(0.3);
  CHECK_FALSE(idx.beta());
  CHECK(idx.exponent(idx.key_of(10)) == 3.0);
  CHECK(idx.exponent(idx.key_of(-1)) == doctest::Approx(-0.3));
  CHECK(idx.is_alpha_multiple(idx.key_of(4)));
  CHECK_THROWS_AS(idx.key_of(1, 1), DomainError);
  CHECK_THROWS_AS(IndexPair::single(0.0), DomainError);
  CHECK_THROWS_AS(IndexPair::single(-0.5), DomainError);
}

TEST_CASE("independent two-index pair") {
  const IndexPair idx = IndexPair::two(0.5, std::sqrt(2.0));
  CHECK(idx.independent());
  const ExponentKey k = idx.key_of(2, 3);
  CHECK(idx.exponent(k) == doctest::Approx(1.0 + 3.0 * std::sqrt(2.0)));
  CHECK(idx.labels(k) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK_FALSE(idx.is_alpha_multiple(idx.key_of(0, 1)));
  auto key = idx.lattice_key(0.5 + std::sqrt(2.0));
  REQUIRE(key);
  CHECK(*key == idx.key_of(1, 1));
  CHECK_FALSE(idx.lattice_key(0.25));
  CHECK_FALSE(idx.lattice_key(-0.5));
}

TEST_CASE("rationally dependent pair collapses to one unit") {
  const IndexPair idx = IndexPair::two(0.5, 1.0);
  CHECK_FALSE(idx.independent());
  CHECK(idx.alpha_units() == 1);
  CHECK(idx.beta_units() == 2);
  // x^{2α} and x^{β} are the same monomial.
  CHECK(idx.key_of(2, 0) == idx.key_of(0, 1));
  CHECK(idx.exponent(idx.key_of(3, 2)) == 3.5);

  const IndexPair thirds = IndexPair::two(0.3, 0.7);
  CHECK(thirds.alpha_units() == 3);
  CHECK(thirds.beta_units() == 7);
  CHECK(thirds.key_of(7, 0) == thirds.key_of(0, 3));
  // Canonical labels keep n in [0, q-1].
  const auto [m, n] = thirds.labels(thirds.key_of(0, 4));
  CHECK(n >= 0);
  CHECK(n < 3);
  CHECK(m * 0.3 + n * 0.7 == doctest::Approx(2.8));
  CHECK(thirds.exponent(thirds.key_of(10, 0)) == 3.0);
}

TEST_CASE("lattice_key requires non-negative coordinates") {
  const IndexPair idx = IndexPair::two(0.4, 1.0);
  CHECK(idx.lattice_key(1.4));
  CHECK(idx.lattice_key(0.0));
  CHECK_FALSE(idx.lattice_key(0.6));
  CHECK_FALSE(idx.lattice_key(0.1));
}

TEST_CASE("pair equality and variants") {
  const IndexPair a = IndexPair::two(0.5, 1.0, 2.0);
  CHECK(a == IndexPair::two(0.5, 1.0, 2.0));
  CHECK_FALSE(a == a.with_base(0.0));
  CHECK_FALSE(a == a.with_side(Side::left));
  CHECK(a.with_side(Side::left).side() == Side::left);
  CHECK(side_from_string(to_string(Side::left)) == Side::left);
  CHECK_THROWS_AS(side_from_string("up"), DomainError);
}

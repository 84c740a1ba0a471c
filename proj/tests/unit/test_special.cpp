#include <cmath>
#include <thread>
#include <vector>

#include "doctest.h"
#include "frac/error.hpp"
#include "frac/gamma.hpp"
#include "frac/special.hpp"

using namespace frac;

TEST_CASE("fractional Pochhammer") {
  CHECK(frac_pochhammer(2.5, 0.5, 0) == 1.0);
  CHECK(frac_pochhammer(2.5, 0.5, 1) == 2.5);
  CHECK(frac_pochhammer(1.0, 0.5, 2) == doctest::Approx(1.8862269254527580136).epsilon(1e-15));
  CHECK(frac_pochhammer(1.0, 0.5, 3) == doctest::Approx(4.01460609254827058754).epsilon(1e-14));
  CHECK_THROWS_AS(frac_pochhammer(1.0, 0.0, 2), DomainError);

  SUBCASE("alpha = 1 is the rising factorial") {
    double rising = 1.0;
    for (std::size_t k = 0; k <= 15; ++k) {
      CHECK(frac_pochhammer(0.7, 1.0, k) == doctest::Approx(rising).epsilon(1e-14));
      rising *= 0.7 + static_cast<double>(k);
    }
  }
  SUBCASE("table extends on demand and agrees with the cache") {
    PochhammerTable t(0.3, 0.8);
    const double late = t[12];
    CHECK(t.values().size() == 13);
    CHECK(late == frac_pochhammer(0.3, 0.8, 12));
    CHECK(t[4] == frac_pochhammer(0.3, 0.8, 4));
  }
}

TEST_CASE("Pochhammer cache is safe under concurrent readers") {
  std::vector<std::thread> pool;
  std::vector<double> got(8);
  for (std::size_t i = 0; i < got.size(); ++i) {
    pool.emplace_back([&got, i] {
      double acc = 0.0;
      for (std::size_t k = 0; k < 40; ++k) acc += frac_pochhammer(0.1 * static_cast<double>(i % 3), 0.6, k);
      got[i] = acc;
    });
  }
  for (auto& t : pool) t.join();
  CHECK(got[0] == got[3]);
  CHECK(got[1] == got[4]);
  CHECK(got[2] == got[5]);
}

TEST_CASE("Mittag-Leffler series") {
  const FracSeries e = mittag_leffler_series(0.5, 0.0, 10.0);
  CHECK(e.size() == 21);
  CHECK(e.coefficient_at(3) == doctest::Approx(reciprocal_gamma(2.5)).epsilon(1e-15));
  SUBCASE("eigenfunction of D^alpha through the exact orders") {
    for (double alpha : {0.3, 0.5, 0.9}) {
      const FracSeries s = mittag_leffler_series(alpha, 0.0, 10.0);
      const FracSeries d = caputo_derivative(s, alpha);
      CHECK(max_relative_difference(d, s, d.cutoff()) < 1e-12);
    }
  }
}

TEST_CASE("Mittag-Leffler evaluation") {
  CHECK(mittag_leffler_eval(1.0, 1.0, 1e-15) == doctest::Approx(M_E).epsilon(1e-14));
  CHECK(std::abs(mittag_leffler_eval(0.5, 1.0, 1e-12) - 5.0089800807622834663) < 1e-10);
  CHECK(mittag_leffler_eval(0.8, 2.0, 1e-14) == doctest::Approx(13.4157488878190146798).epsilon(1e-13));
  CHECK(mittag_leffler_eval(0.5, 0.0, 1e-12) == 1.0);
  CHECK(mittag_leffler_eval(1.0, 30.0, 1e-14) == doctest::Approx(std::exp(30.0)).epsilon(1e-13));
  CHECK_THROWS_AS(mittag_leffler_eval(0.5, -1.0, 1e-12), DomainError);
  CHECK_THROWS_AS(mittag_leffler_eval(0.5, 1.0, 0.0), DomainError);
}

TEST_CASE("fractional exponential, sine and cosine") {
  const FracSeries ex = frac_exp_series(0.5, 0.0, 5.0);
  CHECK(ex.coefficient_at(4) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));

  for (double alpha : {0.4, 0.5, 0.75, 1.0}) {
    const FracSeries s = frac_sin_series(alpha, 0.0, 10.0);
    const FracSeries c = frac_cos_series(alpha, 0.0, 10.0);
    const FracSeries ds = caputo_derivative(s, alpha);
    const FracSeries dc = caputo_derivative(c, alpha);
    CHECK(max_relative_difference(ds, c, ds.cutoff()) < 1e-12);
    CHECK(max_relative_difference(dc, scale(s, -1.0), dc.cutoff()) < 1e-12);
  }
  SUBCASE("alpha = 1 gives the classical functions") {
    CHECK(evaluate(frac_sin_series(1.0, 0.0, 30.0), 0.7).value == doctest::Approx(std::sin(0.7)).epsilon(1e-14));
    CHECK(evaluate(frac_cos_series(1.0, 0.0, 30.0), 0.7).value == doctest::Approx(std::cos(0.7)).epsilon(1e-14));
  }
}

#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "frac/error.hpp"
#include "frac/gamma.hpp"

using namespace frac;
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<30>>;

namespace {

// Γ(p+1)/Γ(q+1) in 30 digits, shifting negative arguments up by recurrence.
double oracle_ratio(double p, double q) {
  Big x = Big(p) + 1, y = Big(q) + 1;
  Big scale = 1;
  while (x < 1) { scale /= x; x += 1; }
  while (y < 1) { scale *= y; y += 1; }
  return static_cast<double>(scale * exp(boost::math::lgamma(x) - boost::math::lgamma(y)));
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("log_gamma reference values") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(2.0) == 0.0);
  CHECK(rel(log_gamma(0.5), 0.57236494292470008707) < 1e-14);
  CHECK(rel(log_gamma(10.0), std::log(362880.0)) < 1e-14);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(NAN), DomainError);
}

TEST_CASE("log_gamma against the 30-digit oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> arg(1e-3, 170.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = arg(rng);
    const double exact = static_cast<double>(boost::math::lgamma(Big(x)));
    worst = std::max(worst, std::abs(log_gamma(x) - exact) / std::max(1.0, std::abs(exact)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("gamma_ratio against the 30-digit oracle on [-0.99, 50]^2") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> arg(-0.99, 50.0);
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double p = arg(rng), q = arg(rng);
    worst = std::max(worst, rel(gamma_ratio(p, q), oracle_ratio(p, q)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("gamma_ratio special cases") {
  CHECK(rel(gamma_ratio(1.0, 0.5), 1.1283791670955125739) < 1e-14);
  CHECK(rel(gamma_ratio(1.5, 1.0), 1.3293403881791370205) < 1e-14);
  CHECK(rel(gamma_ratio(0.5, 1.0), 0.88622692545275801365) < 1e-14);
  CHECK(gamma_ratio(5.0, 3.0) == doctest::Approx(20.0).epsilon(1e-15));

  SUBCASE("denominator pole gives exact zero") {
    CHECK(gamma_ratio(0.0, -1.0) == 0.0);
    CHECK(gamma_ratio(2.5, -3.0) == 0.0);
  }
  SUBCASE("numerator pole throws") { CHECK_THROWS_AS(gamma_ratio(-2.0, 0.5), DomainError); }
  SUBCASE("negative non-integer arguments") {
    CHECK(rel(gamma_ratio(-0.5, 0.0), std::sqrt(M_PI)) < 1e-14);
    CHECK(rel(gamma_ratio(0.0, -0.5), 1.0 / std::sqrt(M_PI)) < 1e-14);
    CHECK(rel(gamma_ratio(-1.5, -0.5), -2.0) < 1e-14);
  }
  SUBCASE("large arguments stay finite") {
    CHECK(rel(gamma_ratio(300.5, 300.0), oracle_ratio(300.5, 300.0)) < 1e-12);
  }
}

TEST_CASE("reciprocal_gamma and poles") {
  CHECK(rel(reciprocal_gamma(0.5), 0.56418958354775628695) < 1e-14);
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-4.0) == 0.0);
  CHECK(is_gamma_pole(0.0));
  CHECK(is_gamma_pole(-7.0));
  CHECK_FALSE(is_gamma_pole(-0.5));
  CHECK_FALSE(is_gamma_pole(1.0));
}

TEST_CASE("Riemann-Liouville derivative of a constant is not zero") {
  CHECK(rel(rl_derivative_of_constant(0.5, 1.0), 0.56418958354775628695) < 1e-14);
  CHECK(rel(rl_derivative_of_constant(0.5, 4.0), 0.28209479177387814347) < 1e-14);
  CHECK_THROWS_AS(rl_derivative_of_constant(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(rl_derivative_of_constant(0.5, 0.0), DomainError);
}

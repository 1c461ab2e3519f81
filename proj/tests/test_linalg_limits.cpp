#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pacal/errors.hpp"
#include "pacal/limits.hpp"
#include "pacal/linalg.hpp"

using namespace pacal;

TEST_CASE("LU solve round-trips random well-conditioned systems") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(t % 3);
    Mat m = Mat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += 0.4 * coeff(rng);
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = coeff(rng);
    const Vec back = solve(m, m * x);
    CHECK((back - x).norm_inf() < 1e-12);
  }
}

TEST_CASE("LU rejects singular matrices") {
  CHECK_THROWS_AS(solve(Mat{{1.0, 2.0}, {2.0, 4.0}}, Vec{1.0, 1.0}), numeric_error);
}

TEST_CASE("determinant and inverse agree with closed forms") {
  const Mat m{{2.0, 1.0}, {1.0, 3.0}};
  LuSolver lu(m);
  CHECK(lu.determinant() == doctest::Approx(5.0).epsilon(1e-14));
  const Mat inv = lu.inverse();
  const Mat prod = m * inv;
  CHECK((prod - Mat::identity(2)).norm_inf() < 1e-14);
}

TEST_CASE("mat_exp closed forms") {
  // rotation generator: exp(t J) = R(t)
  const Mat r = mat_exp(0.7 * Mat::rotation_generator2());
  CHECK(r(0, 0) == doctest::Approx(std::cos(0.7)).epsilon(1e-15));
  CHECK(r(1, 0) == doctest::Approx(std::sin(0.7)).epsilon(1e-15));

  const Mat d = mat_exp(Mat::diagonal(Vec{1.0, -2.0}));
  CHECK(d(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(d(1, 1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(d(0, 1) == 0.0);
}

TEST_CASE("mat_exp general matrix matches series for small norm") {
  const Mat a{{0.1, 0.2}, {-0.05, 0.15}};
  Mat series = Mat::identity(2);
  Mat pow = Mat::identity(2);
  double fact = 1.0;
  for (int k = 1; k <= 20; ++k) {
    pow = pow * a;
    fact *= k;
    series += (1.0 / fact) * pow;
  }
  CHECK((mat_exp(a) - series).norm_inf() < 1e-14);
}

TEST_CASE("mat_exp respects the group law sanity check") {
  const Mat a{{0.0, 1.0}, {0.3, 0.0}};
  const Mat left = mat_exp(a) * mat_exp(a);
  const Mat right = mat_exp(2.0 * a);
  CHECK((left - right).norm_inf() < 1e-13);
}

TEST_CASE("richardson limit recovers a linear-expansion limit") {
  // q(tau) = 3 + 2 tau + tau^2 has limit 3
  const auto q = [](double tau) { return Vec{3.0 + 2.0 * tau + tau * tau}; };
  const LimitEstimate est = richardson_limit(q, {});
  CHECK(est.converged);
  CHECK(est.value[0] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("richardson limit flags a non-converging quotient") {
  // oscillates without settling at any fixed value
  const auto q = [](double tau) { return Vec{std::sin(1.0 / tau)}; };
  LimitConfig cfg;
  cfg.tol = 1e-12;
  const LimitEstimate est = richardson_limit(q, cfg);
  CHECK_FALSE(est.converged);
  CHECK_THROWS_AS(require_limit(q, cfg, "oscillation"), limit_failure_error);
}

TEST_CASE("richardson config validation") {
  const auto q = [](double) { return Vec{0.0}; };
  LimitConfig bad;
  bad.levels = 1;
  CHECK_THROWS_AS(richardson_limit(q, bad), usage_error);
  bad.levels = 8;
  bad.ratio = 1.0;
  CHECK_THROWS_AS(richardson_limit(q, bad), usage_error);
  bad.ratio = 2.0;
  bad.tol = 0.0;
  CHECK_THROWS_AS(richardson_limit(q, bad), usage_error);
}

TEST_CASE("symmetric mode accelerates even expansions") {
  // central-difference style quotient: limit 1, error c2 tau^2 + c4 tau^4
  const auto q = [](double tau) { return Vec{1.0 + 0.5 * tau * tau + 0.1 * std::pow(tau, 4)}; };
  LimitConfig cfg;
  cfg.symmetric = true;
  cfg.levels = 6;
  const LimitEstimate est = richardson_limit(q, cfg);
  CHECK(est.converged);
  CHECK(est.value[0] == doctest::Approx(1.0).epsilon(1e-12));
}

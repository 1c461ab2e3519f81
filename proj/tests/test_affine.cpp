#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pacal/affine.hpp"
#include "pacal/errors.hpp"
#include "support.hpp"

using namespace pacal;
using pacal::testing::dyadic_tuple;

TEST_CASE("translate moves points componentwise") {
  CHECK(translate(ChartPoint{0.0, 0.0}, Translation{0.0, 0.0}) == ChartPoint{0.0, 0.0});
  CHECK(translate(ChartPoint{1.0, 2.0}, Translation{3.0, -1.0}) == ChartPoint{4.0, 1.0});

  const ChartPoint p{0.5, 0.25}, q{2.0, 2.0};
  CHECK(translate(p, between(q, p)) == q);
}

TEST_CASE("translate rejects dimension mismatch") {
  CHECK_THROWS_AS(translate(ChartPoint{1.0, 2.0}, Translation{1.0}), usage_error);
  CHECK_THROWS_AS(between(ChartPoint{1.0}, ChartPoint{1.0, 2.0}), usage_error);
}

TEST_CASE("between is the inverse of translate") {
  CHECK(between(ChartPoint{7.0, 7.0}, ChartPoint{7.0, 7.0}) == Translation{0.0, 0.0});
  CHECK(between(ChartPoint{4.0, 1.0}, ChartPoint{1.0, 2.0}) == Translation{3.0, -1.0});

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const ChartPoint p{dyadic_tuple(rng, 3, -4.0, 4.0)};
    const Translation tr{dyadic_tuple(rng, 3, -4.0, 4.0)};
    CHECK(between(translate(p, tr), p) == tr); // bit-exact on the dyadic grid
  }
}

TEST_CASE("translation composition is commutative with zero identity") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Translation a{dyadic_tuple(rng, 2, -4.0, 4.0)};
    const Translation b{dyadic_tuple(rng, 2, -4.0, 4.0)};
    CHECK(a + b == b + a);
    CHECK(a + Translation::zeros(2) == a);
  }
}

TEST_CASE("Weyl residual vanishes identically") {
  const ChartPoint p{1.0, 2.0};
  CHECK(weyl_residual(p, p, p) == Translation::zeros(2));

  // 1000 random triples, seed 42: cancellation is exact on the dyadic grid
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const ChartPoint a{dyadic_tuple(rng, 2, -4.0, 4.0)};
    const ChartPoint b{dyadic_tuple(rng, 2, -4.0, 4.0)};
    const ChartPoint c{dyadic_tuple(rng, 2, -4.0, 4.0)};
    CHECK(weyl_residual(a, b, c) == Translation::zeros(2));
  }
}

TEST_CASE("four-point residual vanishes and is permutation-stable") {
  const ChartPoint p{3.0, -1.0};
  CHECK(four_point_residual(p, p, p, p) == Translation::zeros(2));

  std::mt19937_64 rng(43);
  for (int t = 0; t < 500; ++t) {
    const ChartPoint a{dyadic_tuple(rng, 2, -4.0, 4.0)};
    const ChartPoint b{dyadic_tuple(rng, 2, -4.0, 4.0)};
    const ChartPoint c{dyadic_tuple(rng, 2, -4.0, 4.0)};
    const ChartPoint d{dyadic_tuple(rng, 2, -4.0, 4.0)};
    CHECK(four_point_residual(a, b, c, d) == Translation::zeros(2));
    CHECK(four_point_residual(b, a, d, c) == Translation::zeros(2));
  }
}

TEST_CASE("interval determines its translation") {
  const Interval iv{ChartPoint{1.0, 1.0}, ChartPoint{4.0, -1.0}};
  CHECK(iv.translation() == Translation{3.0, -2.0});
}

TEST_CASE("vectorize_at inverts the action on the reversed interval") {
  const Mat id = Mat::identity(2);
  CHECK(vectorize_at(ChartPoint{5.0, 5.0}, ChartPoint{5.0, 5.0}, id) == GroundVector{0.0, 0.0});
  // direction runs q -> p, so the identity action gives p - q
  CHECK(vectorize_at(ChartPoint{0.0, 0.0}, ChartPoint{2.0, 3.0}, id) == GroundVector{-2.0, -3.0});

  const Mat twice = 2.0 * Mat::identity(2);
  // oracle: solve 2 I x = (p - q) = (-2, -3) by hand -> (-1, -1.5)
  CHECK(vectorize_at(ChartPoint{0.0, 0.0}, ChartPoint{2.0, 3.0}, twice) ==
        GroundVector{-1.0, -1.5});

  CHECK_THROWS_AS(
      vectorize_at(ChartPoint{0.0, 0.0}, ChartPoint{1.0, 1.0}, Mat{{1.0, 1.0}, {1.0, 1.0}}),
      numeric_error);
}

TEST_CASE("canonical self-action reproduces vector addition") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    const Vec a = dyadic_tuple(rng, 2, -4.0, 4.0);
    const Vec b = dyadic_tuple(rng, 2, -4.0, 4.0);
    // translating a "vector as point" by another vector is plain addition
    CHECK(translate(ChartPoint{a}, Translation{b}).raw() == a + b);
  }
}

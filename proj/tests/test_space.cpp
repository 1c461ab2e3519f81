#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pacal/errors.hpp"
#include "pacal/space.hpp"
#include "support.hpp"

using namespace pacal;
namespace pt = pacal::testing;

TEST_CASE("box domain membership") {
  const BoxDomain box(Vec{-1.0, -2.0}, Vec{1.0, 2.0});
  CHECK(box.contains(ChartPoint{0.0, 0.0}));
  CHECK(box.contains(ChartPoint{1.0, 2.0})); // closed boundary
  CHECK_FALSE(box.contains(ChartPoint{1.1, 0.0}));
  CHECK_FALSE(box.interior(ChartPoint{1.0, 0.0}, 0.25));
  CHECK(box.interior(ChartPoint{0.5, 0.0}, 0.25));
  CHECK_THROWS_AS(BoxDomain(Vec{1.0}, Vec{0.0}), usage_error);
}

TEST_CASE("act is the identity on the flat space") {
  const auto flat = pt::flat_space();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const ChartPoint p = pt::random_interior_point(rng, flat.system, 0.5);
    const GroundVector v = pt::random_ground(rng, 2, 1.0);
    CHECK(act(flat.system, p, v).raw() == v.raw());
  }
}

TEST_CASE("act evaluates the rotation frame") {
  const auto rot = pt::rotation_space();
  // theta = 0 at the origin
  CHECK(pt::rel_err(act(rot.system, ChartPoint{0.0, 0.0}, GroundVector{1.0, 0.0}),
                    Translation{1.0, 0.0}) < 1e-15);
  // oracle: column of R(pi/2) evaluated directly
  const double half_pi = std::acos(0.0);
  const Translation got = act(rot.system, ChartPoint{half_pi, 0.0}, GroundVector{1.0, 0.0});
  CHECK(pt::rel_err(got, Translation{std::cos(half_pi), std::sin(half_pi)}) < 1e-15);
}

TEST_CASE("unact inverts act") {
  const auto rot = pt::rotation_space();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const ChartPoint p = pt::random_interior_point(rng, rot.system, 0.5);
    const GroundVector v = pt::random_ground(rng, 2, 1.0);
    CHECK(pt::rel_err(unact(rot.system, p, act(rot.system, p, v)), v) < 1e-12);
  }

  // scaling frame at p = (ln 2, 0): divide by e^{ln 2} = 2
  const auto sc = pt::scaling_space();
  const GroundVector back =
      unact(sc.system, ChartPoint{std::log(2.0), 0.0}, Translation{2.0, 2.0});
  CHECK(pt::rel_err(back, GroundVector{1.0, 1.0}) < 1e-15);
}

TEST_CASE("act is linear in the vector argument") {
  const auto rot = pt::rotation_space();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const ChartPoint p = pt::random_interior_point(rng, rot.system, 0.5);
    const GroundVector u = pt::random_ground(rng, 2, 1.0);
    const GroundVector w = pt::random_ground(rng, 2, 1.0);
    const double a = pt::dyadic_uniform(rng, -2.0, 2.0);
    const double b = pt::dyadic_uniform(rng, -2.0, 2.0);
    const Translation lhs = act(rot.system, p, a * u + b * w);
    const Translation rhs = a * act(rot.system, p, u) + b * act(rot.system, p, w);
    CHECK(pt::rel_err(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("step composes translate with act and guards the domain") {
  const auto flat = pt::flat_space();
  CHECK(step(flat.system, ChartPoint{1.0, 1.0}, GroundVector{0.5, -0.5}) == ChartPoint{1.5, 0.5});
  CHECK(step(flat.system, ChartPoint{1.0, 1.0}, GroundVector::zeros(2)) == ChartPoint{1.0, 1.0});

  const auto rot = pt::rotation_space();
  CHECK(pt::rel_err(step(rot.system, ChartPoint{0.0, 0.0}, GroundVector{1.0, 0.0}),
                    ChartPoint{1.0, 0.0}) < 1e-15);

  CHECK_THROWS_AS(step(flat.system, ChartPoint{2.9, 0.0}, GroundVector{0.5, 0.0}),
                  domain_exit_error);
  try {
    step(flat.system, ChartPoint{2.9, 0.0}, GroundVector{0.5, 0.0});
  } catch (const domain_exit_error& e) {
    REQUIRE(e.offending_point.size() == 2);
    CHECK(e.offending_point[0] == doctest::Approx(3.4));
  }
}

TEST_CASE("frame directional derivative: analytic matches finite differences") {
  for (const auto& space : {pt::rotation_space(), pt::scaling_space(), pt::mixed_space()}) {
    // strip the analytic derivative to force the finite-difference path
    PointwiseSystem numeric = space.system;
    numeric.frame.directional = nullptr;

    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
      const ChartPoint p = pt::random_interior_point(rng, space.system, 0.5);
      const Vec w = pt::dyadic_tuple(rng, 2, -1.0, 1.0);
      const Mat analytic = frame_directional_derivative(space.system, p, w);
      const Mat fd = frame_directional_derivative(numeric, p, w);
      CHECK((analytic - fd).norm_inf() < 1e-8);
    }
  }
}

TEST_CASE("frame directional derivative is linear in the direction") {
  const auto mixed = pt::mixed_space();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const ChartPoint p = pt::random_interior_point(rng, mixed.system, 0.4);
    const Vec w1 = pt::dyadic_tuple(rng, 2, -1.0, 1.0);
    const Vec w2 = pt::dyadic_tuple(rng, 2, -1.0, 1.0);
    const Mat sum = frame_directional_derivative(mixed.system, p, w1 + w2);
    const Mat parts = frame_directional_derivative(mixed.system, p, w1) +
                      frame_directional_derivative(mixed.system, p, w2);
    CHECK((sum - parts).norm_inf() < 1e-12);
  }
}

TEST_CASE("flat frame has zero directional derivative") {
  const auto flat = pt::flat_space();
  const Mat d = frame_directional_derivative(flat.system, ChartPoint{0.5, -0.5}, Vec{1.0, 2.0});
  CHECK(d.norm_inf() == 0.0);
}

TEST_CASE("flatness residual closed form on the rotation space") {
  const auto rot = pt::rotation_space();
  // oracle: residual = (R(1) - I) v at p = 0, u = e1, v = e1
  const GroundVector r =
      flatness_residual(rot.system, ChartPoint{0.0, 0.0}, GroundVector{1.0, 0.0},
                        GroundVector{1.0, 0.0});
  CHECK(pt::rel_err(r, GroundVector{std::cos(1.0) - 1.0, std::sin(1.0)}) < 1e-14);

  // u = 0 leaves the frame unchanged
  const GroundVector zero =
      flatness_residual(rot.system, ChartPoint{0.3, 0.4}, GroundVector::zeros(2),
                        GroundVector{0.2, 0.9});
  CHECK(norm(zero) == 0.0);
}

TEST_CASE("flatness report separates flat from curved") {
  const auto flat = pt::flat_space();
  const FlatnessReport fr = is_affine_flat(flat.system, 200, 99, 1e-12);
  CHECK(fr.flat);
  CHECK(fr.max_residual == 0.0);

  const auto rot = pt::rotation_space();
  const FlatnessReport rr = is_affine_flat(rot.system, 200, 99, 1e-12);
  CHECK_FALSE(rr.flat);
  CHECK(rr.max_residual > 1e-3);
  // the witness reproduces the reported residual
  CHECK(norm(flatness_residual(rot.system, rr.witness_p, rr.witness_u, rr.witness_v)) ==
        doctest::Approx(rr.max_residual));

  // zero angular velocity degenerates to a constant frame
  const auto still = pt::rotation_space(0.0, 0.0);
  CHECK(is_affine_flat(still.system, 200, 99, 1e-12).flat);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pacal/errors.hpp"
#include "pacal/gallery.hpp"
#include "support.hpp"

using namespace pacal;
namespace pt = pacal::testing;

TEST_CASE("kind round-trips through strings") {
  for (const auto kind : {GalleryKind::flat, GalleryKind::rotation2d, GalleryKind::scaling,
                          GalleryKind::mixed_exp2d, GalleryKind::polynomial, GalleryKind::kink}) {
    CHECK(gallery_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(gallery_kind_from_string("spherical"), usage_error);
}

TEST_CASE("parameter validation") {
  GallerySpec spec;
  spec.kind = GalleryKind::rotation2d;
  spec.dim = 3;
  CHECK_THROWS_AS(build_gallery(spec), usage_error);

  spec.dim = 2;
  spec.omega = {1.0};
  CHECK_THROWS_AS(build_gallery(spec), usage_error);

  GallerySpec sc;
  sc.kind = GalleryKind::scaling;
  sc.dim = 2;
  sc.lambda = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(build_gallery(sc), usage_error);
}

TEST_CASE("flat gallery frame is the identity with zero connection") {
  const auto flat = pt::flat_space();
  CHECK(flat.has_connection_oracle);
  CHECK(flat.oracle_connection(ChartPoint{0.5, 0.5}, GroundVector{1.0, 2.0}).norm_inf() == 0.0);
  CHECK((flat.system.frame_at(ChartPoint{1.0, -1.0}) - Mat::identity(2)).norm_inf() == 0.0);
}

TEST_CASE("rotation gallery oracle at the origin is the rotation generator") {
  const auto rot = pt::rotation_space();
  const Mat g1 = rot.oracle_connection(ChartPoint{0.0, 0.0}, GroundVector{1.0, 0.0});
  CHECK((g1 - Mat::rotation_generator2()).norm_inf() < 1e-15);
  const Mat g2 = rot.oracle_connection(ChartPoint{0.0, 0.0}, GroundVector{0.0, 1.0});
  CHECK(g2.norm_inf() == 0.0);

  // riemann vanishes identically: all oracle matrices commute
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const ChartPoint p = pt::random_interior_point(rng, rot.system, 0.3);
    const GroundVector u = pt::random_ground(rng, 2, 1.0);
    const GroundVector v = pt::random_ground(rng, 2, 1.0);
    const GroundVector w = pt::random_ground(rng, 2, 1.0);
    CHECK(norm(rot.oracle_riemann(u, v, w, p)) < 1e-14);
  }
}

TEST_CASE("scaling gallery oracle is a multiple of the identity") {
  const auto sc = pt::scaling_space();
  const Mat g = sc.oracle_connection(ChartPoint{0.0, 0.0}, GroundVector{1.0, 0.0});
  CHECK((g - Mat::identity(2)).norm_inf() < 1e-15); // lambda . u = 1 at the origin
  CHECK(norm(sc.oracle_riemann(GroundVector{1.0, 0.0}, GroundVector{0.0, 1.0},
                               GroundVector{1.0, 0.0}, ChartPoint{0.2, -0.1})) < 1e-14);
}

TEST_CASE("mixed-exponential oracle reproduces the generator commutator") {
  const auto mixed = pt::mixed_space();
  const ChartPoint origin{0.0, 0.0};
  // hand-computed: [J, diag(1,-1)] e1 = (0, 2)
  const GroundVector r = mixed.oracle_riemann(GroundVector{1.0, 0.0}, GroundVector{0.0, 1.0},
                                              GroundVector{1.0, 0.0}, origin);
  CHECK(pt::rel_err(r, GroundVector{0.0, 2.0}) < 1e-14);

  // at the origin the connection matrices are the generators themselves
  const Mat gx = mixed.oracle_connection(origin, GroundVector{1.0, 0.0});
  CHECK((gx - Mat::rotation_generator2()).norm_inf() < 1e-14);
  const Mat gy = mixed.oracle_connection(origin, GroundVector{0.0, 1.0});
  CHECK((gy - Mat{{1.0, 0.0}, {0.0, -1.0}}).norm_inf() < 1e-14);
}

TEST_CASE("mixed frame matches the product of exponentials") {
  const auto mixed = pt::mixed_space();
  const ChartPoint p{0.4, -0.3};
  const Mat f = mixed.system.frame_at(p);
  const Mat expected = mat_exp(0.4 * Mat::rotation_generator2()) *
                       mat_exp(-0.3 * Mat{{1.0, 0.0}, {0.0, -1.0}});
  CHECK((f - expected).norm_inf() < 1e-14);
}

TEST_CASE("polynomial gallery is deterministic per seed and well-conditioned") {
  const auto a = pt::polynomial_space(7, 2);
  const auto b = pt::polynomial_space(7, 2);
  const ChartPoint p{0.3, -0.6};
  CHECK((a.system.frame_at(p) - b.system.frame_at(p)).norm_inf() == 0.0);
  CHECK_FALSE(a.has_connection_oracle);

  const auto c = pt::polynomial_space(8, 2);
  CHECK((a.system.frame_at(p) - c.system.frame_at(p)).norm_inf() > 0.0);
}

TEST_CASE("polynomial space with zero coefficient cap degenerates to flat") {
  GallerySpec spec;
  spec.kind = GalleryKind::polynomial;
  spec.dim = 2;
  spec.seed = 7;
  spec.coefficient_cap = 0.0;
  const auto degenerate = build_gallery(spec);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const ChartPoint p = pt::random_interior_point(rng, degenerate.system, 0.1);
    CHECK((degenerate.system.frame_at(p) - Mat::identity(2)).norm_inf() == 0.0);
  }
  CHECK(is_affine_flat(degenerate.system, 100, 5, 1e-12).flat);
}

TEST_CASE("kink frame has no analytic derivative") {
  const auto kink = pt::kink_space();
  CHECK_FALSE(kink.system.frame.has_directional());
  CHECK((kink.system.frame_at(ChartPoint{0.5, 0.0}) - 1.5 * Mat::identity(2)).norm_inf() == 0.0);
}

TEST_CASE("near-singular frames are rejected at build time") {
  GallerySpec spec;
  spec.kind = GalleryKind::scaling;
  spec.dim = 1;
  spec.lambda = {500.0}; // e^{500 p} leaves double range across [-2, 2]
  CHECK_THROWS_AS(build_gallery(spec), numeric_error);
}

#ifndef PACAL_TESTS_SUPPORT_HPP
#define PACAL_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "pacal/affine.hpp"
#include "pacal/gallery.hpp"
#include "pacal/space.hpp"

namespace pacal::testing {

// Random samples are drawn from a dyadic grid (integer multiples of 2^-bits)
// so that sums and differences of a few moderate values are exactly
// representable; cancellation identities then hold bit for bit.
inline double dyadic_uniform(std::mt19937_64& rng, double lo, double hi, int bits = 17) {
  const double scale = std::ldexp(1.0, -bits);
  const long long klo = static_cast<long long>(std::ceil(lo / scale));
  const long long khi = static_cast<long long>(std::floor(hi / scale));
  std::uniform_int_distribution<long long> dist(klo, khi);
  return static_cast<double>(dist(rng)) * scale;
}

inline Vec dyadic_tuple(std::mt19937_64& rng, int n, double lo, double hi, int bits = 17) {
  Vec x(n);
  for (int i = 0; i < n; ++i) x[i] = dyadic_uniform(rng, lo, hi, bits);
  return x;
}

inline ChartPoint random_interior_point(std::mt19937_64& rng, const PointwiseSystem& sys,
                                        double margin) {
  const int n = sys.dim();
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = dyadic_uniform(rng, sys.domain.min[i] + margin, sys.domain.max[i] - margin);
  }
  return ChartPoint(x);
}

inline GroundVector random_ground(std::mt19937_64& rng, int n, double scale) {
  return GroundVector(dyadic_tuple(rng, n, -scale, scale));
}

// |a - b| relative to the operand magnitudes, so identities on small values
// remain meaningfully checkable
inline double rel_err(const Vec& a, const Vec& b, double context = 0.0) {
  return (a - b).norm_inf() / (1.0 + a.norm_inf() + b.norm_inf() + context);
}
template <class Tag>
double rel_err(const CoordTuple<Tag>& a, const CoordTuple<Tag>& b, double context = 0.0) {
  return rel_err(a.raw(), b.raw(), context);
}

// canonical gallery fixtures shared across the suites
inline GallerySpace flat_space(int dim = 2) {
  GallerySpec spec;
  spec.kind = GalleryKind::flat;
  spec.dim = dim;
  return build_gallery(spec);
}

inline GallerySpace rotation_space(double w0 = 1.0, double w1 = 0.0) {
  GallerySpec spec;
  spec.kind = GalleryKind::rotation2d;
  spec.dim = 2;
  spec.omega = {w0, w1};
  return build_gallery(spec);
}

inline GallerySpace scaling_space(int dim = 2) {
  GallerySpec spec;
  spec.kind = GalleryKind::scaling;
  spec.dim = dim;
  spec.lambda.assign(static_cast<std::size_t>(dim), 0.0);
  spec.lambda[0] = 1.0;
  return build_gallery(spec);
}

inline GallerySpace mixed_space() {
  GallerySpec spec;
  spec.kind = GalleryKind::mixed_exp2d;
  spec.dim = 2;
  return build_gallery(spec);
}

inline GallerySpace polynomial_space(std::uint64_t seed = 7, int degree = 2) {
  GallerySpec spec;
  spec.kind = GalleryKind::polynomial;
  spec.dim = 2;
  spec.seed = seed;
  spec.degree = degree;
  return build_gallery(spec);
}

inline GallerySpace kink_space() {
  GallerySpec spec;
  spec.kind = GalleryKind::kink;
  spec.dim = 2;
  return build_gallery(spec);
}

} // namespace pacal::testing

#endif

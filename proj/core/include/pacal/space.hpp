#ifndef PACAL_SPACE_HPP
#define PACAL_SPACE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pacal/affine.hpp"
#include "pacal/limits.hpp"
#include "pacal/linalg.hpp"

namespace pacal {

//! Axis-aligned box carrier for the chart; membership is closed containment.
struct BoxDomain {
  Vec min;
  Vec max;

  BoxDomain() = default;
  BoxDomain(Vec lo, Vec hi);
  static BoxDomain centered(int dim, double half_width);

  int dim() const { return min.dim(); }
  bool contains(const ChartPoint& p) const;
  //! Strict containment with a margin on every axis.
  bool interior(const ChartPoint& p, double margin) const;
  bool contains_box(const BoxDomain& other) const;
};

//! The affine action field in matrix form: an invertible frame F(p) per point,
//! optionally with an analytic directional derivative dF(p)[w].
struct FrameField {
  int dim = 0;
  std::function<Mat(const ChartPoint&)> evaluate;
  //! Derivative of F at p in ambient direction w; empty when only finite
  //! differences are available.
  std::function<Mat(const ChartPoint&, const Vec&)> directional;
  std::string name;
  std::vector<double> params;

  bool has_directional() const { return static_cast<bool>(directional); }
};

//! A box chart together with a frame field.
struct PointwiseSystem {
  BoxDomain domain;
  FrameField frame;

  int dim() const { return domain.dim(); }
  //! Evaluates the frame, checking domain membership.
  Mat frame_at(const ChartPoint& p) const;
};

//! Builds the system whose action is the canonical self-action of the ground
//! space on itself: F = I everywhere on the given box.
PointwiseSystem canonical_system(const BoxDomain& domain);

//! F(p) v as a translation.
Translation act(const PointwiseSystem& sys, const ChartPoint& p, const GroundVector& v);

//! F(p)^{-1} t.
GroundVector unact(const PointwiseSystem& sys, const ChartPoint& p, const Translation& t);

//! p + F(p) v, the action-adjusted step. Errors if the result leaves the box.
ChartPoint step(const PointwiseSystem& sys, const ChartPoint& p, const GroundVector& v);

//! Analytic dF(p)[w] when the frame provides it, else a Richardson-extrapolated
//! central difference.
Mat frame_directional_derivative(const PointwiseSystem& sys, const ChartPoint& p, const Vec& w);

//! unact(p, act(step(p,u), v)) - v; zero everywhere iff the frame is constant.
GroundVector flatness_residual(const PointwiseSystem& sys, const ChartPoint& p,
                               const GroundVector& u, const GroundVector& v);

struct FlatnessReport {
  bool flat = false;
  double max_residual = 0.0;
  double tol = 0.0;
  int samples = 0;
  int resampled = 0; //!< draws discarded because the step left the domain
  ChartPoint witness_p;
  GroundVector witness_u;
  GroundVector witness_v;
};

//! Samples (p, u, v) triples and reports the worst flatness residual.
FlatnessReport is_affine_flat(const PointwiseSystem& sys, int sample_count, std::uint64_t seed,
                              double tol);

} // namespace pacal

#endif

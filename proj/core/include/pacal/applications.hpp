#ifndef PACAL_APPLICATIONS_HPP
#define PACAL_APPLICATIONS_HPP

#include <vector>

#include "pacal/fields.hpp"
#include "pacal/limits.hpp"
#include "pacal/space.hpp"

namespace pacal {

//! Non-degenerate symmetric bilinear form; the signature is unconstrained.
struct Metric {
  Mat matrix;
  double apply(const GroundVector& a, const GroundVector& b) const;
};

//! Validates symmetry (to 1e-14 of the magnitude) and invertibility.
Metric make_metric(Mat matrix);

enum class GradientSolve {
  lu,              //!< direct factorization of g
  normal_equations //!< g^T g x = g^T rhs; an independent route for cross-checks
};

//! The unique vector with <grad, u> = d_u phi(x) for all u. Components of the
//! differential are straight-line directional derivatives along the basis.
GroundVector gradient(const ScalarFieldHandle& phi, const Metric& g, const ChartPoint& x,
                      const LimitConfig& cfg = {}, GradientSolve route = GradientSolve::lu);

//! Sampled affine geodesic: the integral curve of gamma' = F(gamma) v.
struct GeodesicTrace {
  std::vector<double> params;      //!< strictly increasing parameter values
  std::vector<ChartPoint> points;  //!< gamma at each parameter
  GroundVector body_velocity;      //!< the constant v defining the geodesic
  int step_count = 0;
  double t_end = 0.0;
};

//! Classical fixed-step RK4 integration of gamma' = F(gamma) v on [0, t_end].
//! Domain exits report the parameter at which the curve left the chart.
GeodesicTrace geodesic_trace(const PointwiseSystem& sys, const ChartPoint& p0,
                             const GroundVector& v, double t_end, int step_count);

//! Max norm of the parameter-derivative of the body velocity F(gamma)^{-1}
//! gamma', both estimated by central differences of the samples. Vanishes on
//! exact geodesics.
double geodesic_residual(const PointwiseSystem& sys, const GeodesicTrace& trace);

} // namespace pacal

#endif

#ifndef PACAL_DISCRETE_HPP
#define PACAL_DISCRETE_HPP

#include <vector>

#include "pacal/space.hpp"

namespace pacal {

//! G_u v(p): v pushed through the action at the displaced point and pulled
//! back through the action at p. A rotation/rescaling caused by curvature.
GroundVector deviation(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                       const ChartPoint& p);
//! Vec variant of the deviation: (p+u-bar)(v) as a translation.
Translation deviation_vec(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                          const ChartPoint& p);

//! D_u v(p) = G_u v(p) - v: the discrete curvature defect. Coincides with the
//! flatness residual.
GroundVector dissociation(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                          const ChartPoint& p);
Translation dissociation_vec(const PointwiseSystem& sys, const GroundVector& u,
                             const GroundVector& v, const ChartPoint& p);

//! G_u(G_v w)(p), the composed deviation.
GroundVector deviation2(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                        const GroundVector& w, const ChartPoint& p);

//! D_u(D_v w)(p), computed by composing dissociations and cross-checked
//! against the expansion through composed deviations.
GroundVector dissociation2(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                           const GroundVector& w, const ChartPoint& p);

//! M_u v(p) = (p + u-bar) + v-bar.
ChartPoint displacement(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                        const ChartPoint& p);

//! Iterated displacement M_uv w(p): the corner reached after stepping by u
//! then v, then by the transported w.
ChartPoint displacement2(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                         const GroundVector& w, const ChartPoint& p);

//! Polygonal path: a start point and an ordered list of ground-vector steps.
struct PolyPath {
  ChartPoint start;
  std::vector<GroundVector> steps;
};

//! Parallel transport of v along the path: the left fold of deviations over
//! successive steps. Domain exits report the failing step index.
GroundVector transport(const PointwiseSystem& sys, const GroundVector& v, const PolyPath& path);

//! T_uv(p) = D_u v(p) - D_v u(p); antisymmetric, zero when either argument is.
GroundVector discrete_torsion(const PointwiseSystem& sys, const GroundVector& u,
                              const GroundVector& v, const ChartPoint& p);
Translation discrete_torsion_vec(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const ChartPoint& p);

//! M_u v(p) <- M_v u(p). Equals the vec discrete torsion.
Translation displacement_bracket(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const ChartPoint& p);

//! R_uvw(p) = D_u(D_v w)(p) - D_v(D_u w)(p), cross-checked against the
//! composed-deviation form.
GroundVector discrete_riemann(const PointwiseSystem& sys, const GroundVector& u,
                              const GroundVector& v, const GroundVector& w, const ChartPoint& p);
Translation discrete_riemann_vec(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const GroundVector& w, const ChartPoint& p);

//! M_uv w(p) <- M_vu w(p). Minus the displacement bracket this equals the vec
//! discrete Riemann curvature.
Translation displacement2_bracket(const PointwiseSystem& sys, const GroundVector& u,
                                  const GroundVector& v, const GroundVector& w,
                                  const ChartPoint& p);

//! C_uvw(p) = T_uv(p) + R_uvw(p). The vec form equals the iterated
//! displacement bracket. Note C_uv0 = T_uv, which need not vanish.
GroundVector discrete_cumulative(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const GroundVector& w, const ChartPoint& p);
Translation discrete_cumulative_vec(const PointwiseSystem& sys, const GroundVector& u,
                                    const GroundVector& v, const GroundVector& w,
                                    const ChartPoint& p);

//! The discrete affine curvature at a point: (u, v) |-> D_u v(at).
struct DiscreteCurvatureMap {
  const PointwiseSystem* system = nullptr;
  ChartPoint at;
  GroundVector apply(const GroundVector& u, const GroundVector& v) const;
};

DiscreteCurvatureMap discrete_curvature_at(const PointwiseSystem& sys, const ChartPoint& p);

} // namespace pacal

#endif

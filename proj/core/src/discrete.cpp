#include "pacal/discrete.hpp"

#include <cmath>
#include <string>

#include "pacal/errors.hpp"

namespace pacal {

namespace {
// Identity cross-checks compare quantities that agree algebraically; the
// tolerance is relative to the operands so near-zero values stay checkable.
void check_identity(const Vec& a, const Vec& b, double scale, const char* what) {
  const double err = (a - b).norm_inf();
  const double bound = 1e-12 * (1.0 + a.norm_inf() + b.norm_inf() + scale);
  if (err > bound) {
    throw numeric_error(std::string(what) + ": cross-check failed (err=" + std::to_string(err) +
                        ", bound=" + std::to_string(bound) + ")");
  }
}
} // namespace

GroundVector deviation(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                       const ChartPoint& p) {
  return unact(sys, p, deviation_vec(sys, u, v, p));
}

Translation deviation_vec(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                          const ChartPoint& p) {
  return act(sys, step(sys, p, u), v);
}

GroundVector dissociation(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                          const ChartPoint& p) {
  return deviation(sys, u, v, p) - v;
}

Translation dissociation_vec(const PointwiseSystem& sys, const GroundVector& u,
                             const GroundVector& v, const ChartPoint& p) {
  return deviation_vec(sys, u, v, p) - act(sys, p, v);
}

GroundVector deviation2(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                        const GroundVector& w, const ChartPoint& p) {
  return deviation(sys, u, deviation(sys, v, w, p), p);
}

GroundVector dissociation2(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                           const GroundVector& w, const ChartPoint& p) {
  const GroundVector composed = dissociation(sys, u, dissociation(sys, v, w, p), p);

  const GroundVector expanded =
      deviation2(sys, u, v, w, p) - deviation(sys, u, w, p) - deviation(sys, v, w, p) + w;
  check_identity(composed.raw(), expanded.raw(), norm_inf(w), "dissociation2");
  return composed;
}

ChartPoint displacement(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                        const ChartPoint& p) {
  return step(sys, step(sys, p, u), v);
}

ChartPoint displacement2(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                         const GroundVector& w, const ChartPoint& p) {
  const ChartPoint corner = displacement(sys, u, v, p);
  const Translation carried = act(sys, step(sys, p, u), deviation(sys, v, w, p));
  const ChartPoint q = translate(corner, carried);
  if (!sys.domain.contains(q)) {
    throw domain_exit_error("displacement2: final point left the chart", q.raw().data());
  }
  return q;
}

GroundVector transport(const PointwiseSystem& sys, const GroundVector& v, const PolyPath& path) {
  GroundVector carried = v;
  ChartPoint at = path.start;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const GroundVector& u = path.steps[k];
    try {
      carried = deviation(sys, u, carried, at);
      at = step(sys, at, u);
    } catch (const domain_exit_error& e) {
      throw domain_exit_error("transport: domain exit at step " + std::to_string(k) + ": " +
                                  e.what(),
                              e.offending_point);
    }
  }
  return carried;
}

GroundVector discrete_torsion(const PointwiseSystem& sys, const GroundVector& u,
                              const GroundVector& v, const ChartPoint& p) {
  const GroundVector t = dissociation(sys, u, v, p) - dissociation(sys, v, u, p);
  try {
    check_identity((sys.frame_at(p) * t.raw()), displacement_bracket(sys, u, v, p).raw(),
                   norm_inf(u) + norm_inf(v), "discrete_torsion");
  } catch (const domain_exit_error&) {
    // the bracket route needs more room than the definition; skip the check
  }
  return t;
}

Translation discrete_torsion_vec(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const ChartPoint& p) {
  return act(sys, p, discrete_torsion(sys, u, v, p));
}

Translation displacement_bracket(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const ChartPoint& p) {
  return between(displacement(sys, u, v, p), displacement(sys, v, u, p));
}

GroundVector discrete_riemann(const PointwiseSystem& sys, const GroundVector& u,
                              const GroundVector& v, const GroundVector& w, const ChartPoint& p) {
  const GroundVector by_dissociation = dissociation2(sys, u, v, w, p) - dissociation2(sys, v, u, w, p);
  const GroundVector by_deviation = deviation2(sys, u, v, w, p) - deviation2(sys, v, u, w, p);
  check_identity(by_dissociation.raw(), by_deviation.raw(), norm_inf(w), "discrete_riemann");
  return by_dissociation;
}

Translation discrete_riemann_vec(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const GroundVector& w, const ChartPoint& p) {
  return act(sys, p, discrete_riemann(sys, u, v, w, p));
}

Translation displacement2_bracket(const PointwiseSystem& sys, const GroundVector& u,
                                  const GroundVector& v, const GroundVector& w,
                                  const ChartPoint& p) {
  return between(displacement2(sys, u, v, w, p), displacement2(sys, v, u, w, p));
}

GroundVector discrete_cumulative(const PointwiseSystem& sys, const GroundVector& u,
                                 const GroundVector& v, const GroundVector& w, const ChartPoint& p) {
  const GroundVector c = discrete_torsion(sys, u, v, p) + discrete_riemann(sys, u, v, w, p);
  try {
    check_identity((sys.frame_at(p) * c.raw()), displacement2_bracket(sys, u, v, w, p).raw(),
                   norm_inf(u) + norm_inf(v) + norm_inf(w), "discrete_cumulative");
  } catch (const domain_exit_error&) {
  }
  return c;
}

Translation discrete_cumulative_vec(const PointwiseSystem& sys, const GroundVector& u,
                                    const GroundVector& v, const GroundVector& w,
                                    const ChartPoint& p) {
  return act(sys, p, discrete_cumulative(sys, u, v, w, p));
}

GroundVector DiscreteCurvatureMap::apply(const GroundVector& u, const GroundVector& v) const {
  if (system == nullptr) throw usage_error("DiscreteCurvatureMap: not bound to a system");
  return dissociation(*system, u, v, at);
}

DiscreteCurvatureMap discrete_curvature_at(const PointwiseSystem& sys, const ChartPoint& p) {
  if (!sys.domain.contains(p)) {
    throw domain_exit_error("discrete_curvature_at: point outside the chart", p.raw().data());
  }
  return DiscreteCurvatureMap{&sys, p};
}

} // namespace pacal

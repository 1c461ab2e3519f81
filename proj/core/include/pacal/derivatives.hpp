#ifndef PACAL_DERIVATIVES_HPP
#define PACAL_DERIVATIVES_HPP

#include "pacal/bilinear.hpp"
#include "pacal/fields.hpp"
#include "pacal/infinitesimal.hpp"
#include "pacal/limits.hpp"
#include "pacal/space.hpp"

namespace pacal {

//! Which displaced point a derivative quotient samples fields at. The action
//! step gives the point-space operators; on a chart whose frame is the
//! canonical self-action the two coincide and the plain step gives the
//! classical directional derivative.
enum class StepKind {
  action, //!< p + tau u-bar, i.e. translate(p, F(p) tau u)
  plain   //!< p + tau u componentwise
};

// ---- plain (untransported) derivatives -----------------------------------

double plain_derivative(const PointwiseSystem& sys, const ScalarFieldHandle& field,
                        const GroundVector& u, const ChartPoint& p,
                        StepKind step = StepKind::action, const LimitConfig& cfg = {});

GroundVector plain_derivative(const PointwiseSystem& sys, const VectorFieldHandle& field,
                              const GroundVector& u, const ChartPoint& p,
                              StepKind step = StepKind::action, const LimitConfig& cfg = {});

Covector plain_derivative(const PointwiseSystem& sys, const CovectorFieldHandle& field,
                          const GroundVector& u, const ChartPoint& p,
                          StepKind step = StepKind::action, const LimitConfig& cfg = {});

// ---- transported derivatives of vector fields ----------------------------

//! Reduced derivative: the displaced field value is pulled back through the
//! action before differencing. StepKind::plain gives the vector-space variant
//! that samples the field along straight lines.
GroundVector vector_field_reduced_derivative(const PointwiseSystem& sys,
                                             const VectorFieldHandle& field, const GroundVector& u,
                                             const ChartPoint& p, StepKind step = StepKind::action,
                                             const LimitConfig& cfg = {});

//! Field-indexed variant: the direction is the field's value at p.
GroundVector vector_field_reduced_derivative(const PointwiseSystem& sys,
                                             const VectorFieldHandle& field,
                                             const VectorFieldHandle& direction,
                                             const ChartPoint& p, StepKind step = StepKind::action,
                                             const LimitConfig& cfg = {});

//! Complete derivative: field values live in the point space of `target`,
//! whose own frame normalizes the differences.
GroundVector vector_field_complete_derivative(const PointwiseSystem& sys,
                                              const PointwiseSystem& target,
                                              const VectorFieldHandle& field,
                                              const GroundVector& u, const ChartPoint& p,
                                              const LimitConfig& cfg = {});

//! Field-indexed pseudo-derivative: both arguments frozen at p. Depends only
//! on the field values at p, never on nearby values.
GroundVector pseudo_derivative(const PointwiseSystem& sys, const VectorFieldHandle& direction,
                               const VectorFieldHandle& field, const ChartPoint& p,
                               DeltaMode mode = DeltaMode::numeric, const LimitConfig& cfg = {});

// ---- derivatives of point fields ------------------------------------------

GroundVector point_field_complete_derivative(const PointwiseSystem& sys,
                                             const PointwiseSystem& target,
                                             const PointFieldHandle& field, const GroundVector& u,
                                             const ChartPoint& p, const LimitConfig& cfg = {});

//! Requires the field's target chart to be contained in the source chart;
//! differences are pulled back through the source frame at p.
GroundVector point_field_reduced_derivative(const PointwiseSystem& sys,
                                            const PointFieldHandle& field, const GroundVector& u,
                                            const ChartPoint& p, const LimitConfig& cfg = {});

// ---- Lie derivative and torsion from derivatives --------------------------

//! L_u v = (d_u v) - (d_v u) with plain straight-line directional derivatives;
//! the canonical-frame operator context. Depends on the fields, not only on
//! their values at x.
GroundVector lie_derivative(const PointwiseSystem& sys, const VectorFieldHandle& u_field,
                            const VectorFieldHandle& v_field, const ChartPoint& x,
                            const LimitConfig& cfg = {});

//! Reduced-derivative torsion: del_u v - del_v u - L_u v on the chart viewed
//! as a vector space. Equals torsion(u(x), v(x), x) for any smooth extensions.
GroundVector torsion_via_derivatives(const PointwiseSystem& sys, const VectorFieldHandle& u_field,
                                     const VectorFieldHandle& v_field, const ChartPoint& x,
                                     const LimitConfig& cfg = {});

// ---- decompositions --------------------------------------------------------

//! nabla_u v - delta_u v - Delta_u v(p) with the pseudo-derivative taken on
//! the frozen value v(p); identically zero in exact arithmetic.
GroundVector decomposition_residual(const PointwiseSystem& sys, const VectorFieldHandle& field,
                                    const GroundVector& u, const ChartPoint& p,
                                    const LimitConfig& cfg = {});

//! |(delta_u phi)(v) - delta_u(phi(v)) + phi(Delta_u v)| for the constant
//! extension of v.
double covector_decomposition_residual(const PointwiseSystem& sys, const CovectorFieldHandle& phi,
                                       const GroundVector& v, const GroundVector& u,
                                       const ChartPoint& p, const LimitConfig& cfg = {});

//! ||P_tau v(p_tau) - v(p)|| at step tau: the transported displaced value must
//! approach the value at p as tau shrinks.
double coherence_residual(const PointwiseSystem& sys, const VectorFieldHandle& field,
                          const GroundVector& u, const ChartPoint& p, double tau);

// ---- product rules ---------------------------------------------------------
// Each rule's left side is evaluated by its own joint limit and compared with
// the sum of one-sided derivative terms; the residual norm is returned.

//! Pseudo-derivative rule on fixed vectors:
//! Delta_u<<v,w>> vs <<v, Delta_u w>> + <<Delta_u v, w>>.
double product_rule_residual_pseudo(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                    const GroundVector& v, const GroundVector& w,
                                    const GroundVector& u, const ChartPoint& p,
                                    const LimitConfig& cfg = {});

//! Coherent reduced-derivative rule on uniform vector fields.
double product_rule_residual_reduced(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                     const VectorFieldHandle& v_field,
                                     const VectorFieldHandle& w_field, const GroundVector& u,
                                     const ChartPoint& p, const LimitConfig& cfg = {});

//! Plain-derivative rule on vector fields.
double product_rule_residual_plain(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                   const VectorFieldHandle& v_field,
                                   const VectorFieldHandle& w_field, const GroundVector& u,
                                   const ChartPoint& p, const LimitConfig& cfg = {});

//! Mixed rule for a covector field against a vector field:
//! joint limit of <<phi(p_tau), P_tau v(p_tau)>> vs <<phi, nabla_u v>> + <<delta_u phi, v>>.
double product_rule_residual_mixed(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                   const CovectorFieldHandle& phi, const VectorFieldHandle& v_field,
                                   const GroundVector& u, const ChartPoint& p,
                                   const LimitConfig& cfg = {});

//! Scalar-field-times-vector-field rule:
//! joint limit of phi(p_tau) P_tau v(p_tau) vs phi nabla_u v + (delta_u phi) v.
double product_rule_residual_scalar_vector(const PointwiseSystem& sys,
                                           const ScalarFieldHandle& phi,
                                           const VectorFieldHandle& v_field, const GroundVector& u,
                                           const ChartPoint& p, const LimitConfig& cfg = {});

//! Scalar pairing corollary:
//! delta_u(phi(v)) - phi(nabla_u v) - (delta_u phi)(v).
double pairing_rule_residual(const PointwiseSystem& sys, const CovectorFieldHandle& phi,
                             const VectorFieldHandle& v_field, const GroundVector& u,
                             const ChartPoint& p, const LimitConfig& cfg = {});

// ---- Koszul axioms ---------------------------------------------------------

struct KoszulReport {
  double direction_linearity = 0.0; //!< nabla_{phi u + u'} v  vs  phi nabla_u v + nabla_{u'} v
  double argument_linearity = 0.0;  //!< nabla_u(lambda v + v') vs lambda nabla_u v + nabla_u v'
  double leibniz = 0.0;             //!< nabla_u(phi v) vs phi nabla_u v + (delta_u phi) v
  double constant_basis = 0.0;      //!< max_ij |nabla_{e_i} e_j - Delta_{e_i} e_j|
};

KoszulReport koszul_axiom_residuals(const PointwiseSystem& sys, const VectorFieldHandle& u_field,
                                    const VectorFieldHandle& u2_field,
                                    const VectorFieldHandle& v_field,
                                    const VectorFieldHandle& v2_field, const ScalarFieldHandle& phi,
                                    double lambda, const ChartPoint& p,
                                    const LimitConfig& cfg = {});

} // namespace pacal

#endif

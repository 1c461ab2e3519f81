#include "pacal/derivatives.hpp"

#include <cmath>

#include "pacal/errors.hpp"

namespace pacal {

namespace {

ChartPoint sample_point(const PointwiseSystem& sys, const ChartPoint& p, const GroundVector& u,
                        double tau, StepKind step) {
  if (step == StepKind::action) return pacal::step(sys, p, tau * u);
  const ChartPoint q = translate(p, Translation(tau * u.raw()));
  if (!sys.domain.contains(q)) {
    throw domain_exit_error("plain step left the chart", q.raw().data());
  }
  return q;
}

// v |-> F(p)^{-1} F(step(p, tau u)) v, the frame transition along the action step
struct Transition {
  Transition(const PointwiseSystem& sys, const ChartPoint& p, const GroundVector& u, double tau)
      : base(sys.frame_at(p)), displaced(sys.frame_at(pacal::step(sys, p, tau * u))) {}
  Vec operator()(const Vec& v) const { return base.solve(displaced * v); }
  LuSolver base;
  Mat displaced;
};

} // namespace

double plain_derivative(const PointwiseSystem& sys, const ScalarFieldHandle& field,
                        const GroundVector& u, const ChartPoint& p, StepKind step,
                        const LimitConfig& cfg) {
  const double at_p = field.eval(p);
  const auto quotient = [&](double tau) {
    return Vec{(field.eval(sample_point(sys, p, u, tau, step)) - at_p) / tau};
  };
  return require_limit(quotient, cfg, "plain_derivative(scalar)")[0];
}

GroundVector plain_derivative(const PointwiseSystem& sys, const VectorFieldHandle& field,
                              const GroundVector& u, const ChartPoint& p, StepKind step,
                              const LimitConfig& cfg) {
  const GroundVector at_p = field.eval(p);
  const auto quotient = [&](double tau) {
    return (1.0 / tau) * (field.eval(sample_point(sys, p, u, tau, step)) - at_p).raw();
  };
  return GroundVector(require_limit(quotient, cfg, "plain_derivative(vector)"));
}

Covector plain_derivative(const PointwiseSystem& sys, const CovectorFieldHandle& field,
                          const GroundVector& u, const ChartPoint& p, StepKind step,
                          const LimitConfig& cfg) {
  const Covector at_p = field.eval(p);
  const auto quotient = [&](double tau) {
    return (1.0 / tau) * (field.eval(sample_point(sys, p, u, tau, step)) - at_p).raw();
  };
  return Covector(require_limit(quotient, cfg, "plain_derivative(covector)"));
}

GroundVector vector_field_reduced_derivative(const PointwiseSystem& sys,
                                             const VectorFieldHandle& field, const GroundVector& u,
                                             const ChartPoint& p, StepKind step,
                                             const LimitConfig& cfg) {
  const GroundVector at_p = field.eval(p);
  const auto quotient = [&](double tau) {
    const Transition transition(sys, p, u, tau);
    const GroundVector displaced = field.eval(sample_point(sys, p, u, tau, step));
    return (1.0 / tau) * (transition(displaced.raw()) - at_p.raw());
  };
  return GroundVector(require_limit(quotient, cfg, "vector_field_reduced_derivative"));
}

GroundVector vector_field_reduced_derivative(const PointwiseSystem& sys,
                                             const VectorFieldHandle& field,
                                             const VectorFieldHandle& direction,
                                             const ChartPoint& p, StepKind step,
                                             const LimitConfig& cfg) {
  return vector_field_reduced_derivative(sys, field, direction.eval(p), p, step, cfg);
}

GroundVector vector_field_complete_derivative(const PointwiseSystem& sys,
                                              const PointwiseSystem& target,
                                              const VectorFieldHandle& field,
                                              const GroundVector& u, const ChartPoint& p,
                                              const LimitConfig& cfg) {
  const GroundVector at_p = field.eval(p);
  const ChartPoint value_point{at_p.raw()};
  if (!target.domain.contains(value_point)) {
    throw domain_exit_error("vector_field_complete_derivative: field value outside target chart",
                            at_p.raw().data());
  }
  const LuSolver at_value(target.frame_at(value_point));
  const auto quotient = [&](double tau) {
    const GroundVector displaced = field.eval(step(sys, p, tau * u));
    const ChartPoint displaced_point{displaced.raw()};
    if (!target.domain.contains(displaced_point)) {
      throw domain_exit_error(
          "vector_field_complete_derivative: displaced value outside target chart",
          displaced.raw().data());
    }
    const Vec normalized = at_value.solve(target.frame_at(displaced_point) * displaced.raw());
    return (1.0 / tau) * (normalized - at_p.raw());
  };
  return GroundVector(require_limit(quotient, cfg, "vector_field_complete_derivative"));
}

GroundVector pseudo_derivative(const PointwiseSystem& sys, const VectorFieldHandle& direction,
                               const VectorFieldHandle& field, const ChartPoint& p, DeltaMode mode,
                               const LimitConfig& cfg) {
  return pseudo_derivative(sys, direction.eval(p), field.eval(p), p, mode, cfg);
}

GroundVector point_field_complete_derivative(const PointwiseSystem& sys,
                                             const PointwiseSystem& target,
                                             const PointFieldHandle& field, const GroundVector& u,
                                             const ChartPoint& p, const LimitConfig& cfg) {
  const ChartPoint image = field.eval(p);
  const LuSolver at_image(target.frame_at(image));
  const auto quotient = [&](double tau) {
    const ChartPoint displaced = field.eval(step(sys, p, tau * u));
    if (!target.domain.contains(displaced)) {
      throw domain_exit_error("point_field_complete_derivative: image left the target chart",
                              displaced.raw().data());
    }
    return (1.0 / tau) * at_image.solve(between(displaced, image).raw());
  };
  return GroundVector(require_limit(quotient, cfg, "point_field_complete_derivative"));
}

GroundVector point_field_reduced_derivative(const PointwiseSystem& sys,
                                            const PointFieldHandle& field, const GroundVector& u,
                                            const ChartPoint& p, const LimitConfig& cfg) {
  if (field.target_domain && !sys.domain.contains_box(*field.target_domain)) {
    throw usage_error(
        "point_field_reduced_derivative: target chart is not contained in the source chart");
  }
  const ChartPoint image = field.eval(p);
  const LuSolver at_p(sys.frame_at(p));
  const auto quotient = [&](double tau) {
    const ChartPoint displaced = field.eval(step(sys, p, tau * u));
    return (1.0 / tau) * at_p.solve(between(displaced, image).raw());
  };
  return GroundVector(require_limit(quotient, cfg, "point_field_reduced_derivative"));
}

GroundVector lie_derivative(const PointwiseSystem& sys, const VectorFieldHandle& u_field,
                            const VectorFieldHandle& v_field, const ChartPoint& x,
                            const LimitConfig& cfg) {
  const GroundVector du_v =
      plain_derivative(sys, v_field, u_field.eval(x), x, StepKind::plain, cfg);
  const GroundVector dv_u =
      plain_derivative(sys, u_field, v_field.eval(x), x, StepKind::plain, cfg);
  return du_v - dv_u;
}

GroundVector torsion_via_derivatives(const PointwiseSystem& sys, const VectorFieldHandle& u_field,
                                     const VectorFieldHandle& v_field, const ChartPoint& x,
                                     const LimitConfig& cfg) {
  const GroundVector nabla_uv =
      vector_field_reduced_derivative(sys, v_field, u_field.eval(x), x, StepKind::plain, cfg);
  const GroundVector nabla_vu =
      vector_field_reduced_derivative(sys, u_field, v_field.eval(x), x, StepKind::plain, cfg);
  return nabla_uv - nabla_vu - lie_derivative(sys, u_field, v_field, x, cfg);
}

GroundVector decomposition_residual(const PointwiseSystem& sys, const VectorFieldHandle& field,
                                    const GroundVector& u, const ChartPoint& p,
                                    const LimitConfig& cfg) {
  const GroundVector reduced = vector_field_reduced_derivative(sys, field, u, p, StepKind::action, cfg);
  const GroundVector plain = plain_derivative(sys, field, u, p, StepKind::action, cfg);
  const GroundVector pseudo = pseudo_derivative(sys, u, field.eval(p), p, DeltaMode::numeric, cfg);
  return reduced - plain - pseudo;
}

double covector_decomposition_residual(const PointwiseSystem& sys, const CovectorFieldHandle& phi,
                                       const GroundVector& v, const GroundVector& u,
                                       const ChartPoint& p, const LimitConfig& cfg) {
  const Covector dphi = plain_derivative(sys, phi, u, p, StepKind::action, cfg);
  const ScalarFieldHandle paired = pairing_field(phi, constant_vector_field(sys.dim(), v));
  const double d_pairing = plain_derivative(sys, paired, u, p, StepKind::action, cfg);
  const GroundVector delta_v = pseudo_derivative(sys, u, v, p, DeltaMode::numeric, cfg);
  return std::abs(pair(dphi, v) - d_pairing + pair(phi.eval(p), delta_v));
}

double coherence_residual(const PointwiseSystem& sys, const VectorFieldHandle& field,
                          const GroundVector& u, const ChartPoint& p, double tau) {
  const Transition transition(sys, p, u, tau);
  const GroundVector displaced = field.eval(step(sys, p, tau * u));
  return (transition(displaced.raw()) - field.eval(p).raw()).norm();
}

namespace {
void check_operands(const BilinearMapHandle& map, int dim, const char* what) {
  if (map.operand_dim != dim) {
    throw usage_error(std::string(what) + ": bilinear map operand dimension mismatch");
  }
}
} // namespace

double product_rule_residual_pseudo(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                    const GroundVector& v, const GroundVector& w,
                                    const GroundVector& u, const ChartPoint& p,
                                    const LimitConfig& cfg) {
  check_operands(map, sys.dim(), "product_rule_residual_pseudo");
  const Vec at_p = map.apply(v.raw(), w.raw());
  const auto joint = [&](double tau) {
    const Transition transition(sys, p, u, tau);
    return (1.0 / tau) * (map.apply(transition(v.raw()), transition(w.raw())) - at_p);
  };
  const Vec lhs = require_limit(joint, cfg, "product_rule_residual_pseudo");

  const GroundVector dv = pseudo_derivative(sys, u, v, p, DeltaMode::numeric, cfg);
  const GroundVector dw = pseudo_derivative(sys, u, w, p, DeltaMode::numeric, cfg);
  const Vec rhs = map.apply(v.raw(), dw.raw()) + map.apply(dv.raw(), w.raw());
  return (lhs - rhs).norm_inf();
}

double product_rule_residual_reduced(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                     const VectorFieldHandle& v_field,
                                     const VectorFieldHandle& w_field, const GroundVector& u,
                                     const ChartPoint& p, const LimitConfig& cfg) {
  check_operands(map, sys.dim(), "product_rule_residual_reduced");
  const Vec at_p = map.apply(v_field.eval(p).raw(), w_field.eval(p).raw());
  const auto joint = [&](double tau) {
    const Transition transition(sys, p, u, tau);
    const ChartPoint q = step(sys, p, tau * u);
    return (1.0 / tau) *
           (map.apply(transition(v_field.eval(q).raw()), transition(w_field.eval(q).raw())) - at_p);
  };
  const Vec lhs = require_limit(joint, cfg, "product_rule_residual_reduced");

  const GroundVector dv = vector_field_reduced_derivative(sys, v_field, u, p, StepKind::action, cfg);
  const GroundVector dw = vector_field_reduced_derivative(sys, w_field, u, p, StepKind::action, cfg);
  const Vec rhs = map.apply(v_field.eval(p).raw(), dw.raw()) + map.apply(dv.raw(), w_field.eval(p).raw());
  return (lhs - rhs).norm_inf();
}

double product_rule_residual_plain(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                   const VectorFieldHandle& v_field,
                                   const VectorFieldHandle& w_field, const GroundVector& u,
                                   const ChartPoint& p, const LimitConfig& cfg) {
  check_operands(map, sys.dim(), "product_rule_residual_plain");
  const Vec at_p = map.apply(v_field.eval(p).raw(), w_field.eval(p).raw());
  const auto joint = [&](double tau) {
    const ChartPoint q = step(sys, p, tau * u);
    return (1.0 / tau) * (map.apply(v_field.eval(q).raw(), w_field.eval(q).raw()) - at_p);
  };
  const Vec lhs = require_limit(joint, cfg, "product_rule_residual_plain");

  const GroundVector dv = plain_derivative(sys, v_field, u, p, StepKind::action, cfg);
  const GroundVector dw = plain_derivative(sys, w_field, u, p, StepKind::action, cfg);
  const Vec rhs = map.apply(v_field.eval(p).raw(), dw.raw()) + map.apply(dv.raw(), w_field.eval(p).raw());
  return (lhs - rhs).norm_inf();
}

double product_rule_residual_mixed(const PointwiseSystem& sys, const BilinearMapHandle& map,
                                   const CovectorFieldHandle& phi, const VectorFieldHandle& v_field,
                                   const GroundVector& u, const ChartPoint& p,
                                   const LimitConfig& cfg) {
  check_operands(map, sys.dim(), "product_rule_residual_mixed");
  const Vec at_p = map.apply(phi.eval(p).raw(), v_field.eval(p).raw());
  const auto joint = [&](double tau) {
    const Transition transition(sys, p, u, tau);
    const ChartPoint q = step(sys, p, tau * u);
    return (1.0 / tau) * (map.apply(phi.eval(q).raw(), transition(v_field.eval(q).raw())) - at_p);
  };
  const Vec lhs = require_limit(joint, cfg, "product_rule_residual_mixed");

  const GroundVector dv = vector_field_reduced_derivative(sys, v_field, u, p, StepKind::action, cfg);
  const Covector dphi = plain_derivative(sys, phi, u, p, StepKind::action, cfg);
  const Vec rhs = map.apply(phi.eval(p).raw(), dv.raw()) + map.apply(dphi.raw(), v_field.eval(p).raw());
  return (lhs - rhs).norm_inf();
}

double product_rule_residual_scalar_vector(const PointwiseSystem& sys,
                                           const ScalarFieldHandle& phi,
                                           const VectorFieldHandle& v_field, const GroundVector& u,
                                           const ChartPoint& p, const LimitConfig& cfg) {
  const Vec at_p = phi.eval(p) * v_field.eval(p).raw();
  const auto joint = [&](double tau) {
    const Transition transition(sys, p, u, tau);
    const ChartPoint q = step(sys, p, tau * u);
    return (1.0 / tau) * (phi.eval(q) * transition(v_field.eval(q).raw()) - at_p);
  };
  const Vec lhs = require_limit(joint, cfg, "product_rule_residual_scalar_vector");

  const GroundVector dv = vector_field_reduced_derivative(sys, v_field, u, p, StepKind::action, cfg);
  const double dphi = plain_derivative(sys, phi, u, p, StepKind::action, cfg);
  const Vec rhs = phi.eval(p) * dv.raw() + dphi * v_field.eval(p).raw();
  return (lhs - rhs).norm_inf();
}

double pairing_rule_residual(const PointwiseSystem& sys, const CovectorFieldHandle& phi,
                             const VectorFieldHandle& v_field, const GroundVector& u,
                             const ChartPoint& p, const LimitConfig& cfg) {
  const double d_pairing = plain_derivative(sys, pairing_field(phi, v_field), u, p,
                                            StepKind::action, cfg);
  const GroundVector dv = vector_field_reduced_derivative(sys, v_field, u, p, StepKind::action, cfg);
  const Covector dphi = plain_derivative(sys, phi, u, p, StepKind::action, cfg);
  return std::abs(d_pairing - pair(phi.eval(p), dv) - pair(dphi, v_field.eval(p)));
}

KoszulReport koszul_axiom_residuals(const PointwiseSystem& sys, const VectorFieldHandle& u_field,
                                    const VectorFieldHandle& u2_field,
                                    const VectorFieldHandle& v_field,
                                    const VectorFieldHandle& v2_field, const ScalarFieldHandle& phi,
                                    double lambda, const ChartPoint& p, const LimitConfig& cfg) {
  const int n = sys.dim();
  KoszulReport report;

  const GroundVector u_at = u_field.eval(p);
  const GroundVector u2_at = u2_field.eval(p);
  const double phi_at = phi.eval(p);

  // (1) function-linearity in the direction slot
  {
    const GroundVector lhs =
        vector_field_reduced_derivative(sys, v_field, phi_at * u_at + u2_at, p, StepKind::action, cfg);
    const GroundVector rhs =
        phi_at * vector_field_reduced_derivative(sys, v_field, u_at, p, StepKind::action, cfg) +
        vector_field_reduced_derivative(sys, v_field, u2_at, p, StepKind::action, cfg);
    report.direction_linearity = norm_inf(lhs - rhs);
  }

  // (2) linearity in the differentiated field
  {
    const VectorFieldHandle combined = add_fields(scale_field(lambda, v_field), v2_field);
    const GroundVector lhs =
        vector_field_reduced_derivative(sys, combined, u_at, p, StepKind::action, cfg);
    const GroundVector rhs =
        lambda * vector_field_reduced_derivative(sys, v_field, u_at, p, StepKind::action, cfg) +
        vector_field_reduced_derivative(sys, v2_field, u_at, p, StepKind::action, cfg);
    report.argument_linearity = norm_inf(lhs - rhs);
  }

  // (3) Leibniz rule against the scalar field
  {
    const VectorFieldHandle product = scalar_times_vector(phi, v_field);
    const GroundVector lhs =
        vector_field_reduced_derivative(sys, product, u_at, p, StepKind::action, cfg);
    const GroundVector rhs =
        phi_at * vector_field_reduced_derivative(sys, v_field, u_at, p, StepKind::action, cfg) +
        plain_derivative(sys, phi, u_at, p, StepKind::action, cfg) * v_field.eval(p);
    report.leibniz = norm_inf(lhs - rhs);
  }

  // constant basis fields reduce the derivative to the pseudo-derivative
  for (int i = 0; i < n; ++i) {
    const GroundVector ei = GroundVector::basis(n, i);
    for (int j = 0; j < n; ++j) {
      const GroundVector ej = GroundVector::basis(n, j);
      const GroundVector nabla = vector_field_reduced_derivative(
          sys, constant_vector_field(n, ej), ei, p, StepKind::action, cfg);
      const GroundVector delta = pseudo_derivative(sys, ei, ej, p, DeltaMode::numeric, cfg);
      report.constant_basis = std::max(report.constant_basis, norm_inf(nabla - delta));
    }
  }
  return report;
}

} // namespace pacal

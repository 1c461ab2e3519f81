#include "pacal/applications.hpp"

#include <cmath>
#include <string>

#include "pacal/errors.hpp"

namespace pacal {

double Metric::apply(const GroundVector& a, const GroundVector& b) const {
  return a.raw().dot(matrix * b.raw());
}

Metric make_metric(Mat matrix) {
  if (matrix.rows() != matrix.cols()) throw usage_error("make_metric: matrix must be square");
  const double scale = matrix.norm_inf();
  for (int i = 0; i < matrix.rows(); ++i) {
    for (int j = i + 1; j < matrix.cols(); ++j) {
      if (std::abs(matrix(i, j) - matrix(j, i)) > 1e-14 * (1.0 + scale)) {
        throw usage_error("make_metric: matrix is not symmetric");
      }
    }
  }
  LuSolver check(matrix); // throws when degenerate
  (void)check;
  return Metric{std::move(matrix)};
}

GroundVector gradient(const ScalarFieldHandle& phi, const Metric& g, const ChartPoint& x,
                      const LimitConfig& cfg, GradientSolve route) {
  const int n = g.matrix.rows();
  if (x.dim() != n) throw usage_error("gradient: point dimension mismatch");

  // differential along basis directions, straight-line quotients
  Vec dphi(n);
  const double at_x = phi.eval(x);
  for (int i = 0; i < n; ++i) {
    const auto quotient = [&](double tau) {
      ChartPoint q = x;
      q[i] += tau;
      return Vec{(phi.eval(q) - at_x) / tau};
    };
    dphi[i] = require_limit(quotient, cfg, "gradient: differential component")[0];
  }

  if (route == GradientSolve::lu) return GroundVector(solve(g.matrix, dphi));
  const Mat gt = g.matrix.transpose();
  return GroundVector(solve(gt * g.matrix, gt * dphi));
}

GeodesicTrace geodesic_trace(const PointwiseSystem& sys, const ChartPoint& p0,
                             const GroundVector& v, double t_end, int step_count) {
  if (step_count < 1) throw usage_error("geodesic_trace: step_count must be at least 1");
  if (!(t_end > 0.0)) throw usage_error("geodesic_trace: t_end must be positive");
  if (!sys.domain.contains(p0)) {
    throw domain_exit_error("geodesic_trace: start point outside the chart", p0.raw().data());
  }

  const double h = t_end / step_count;
  const auto velocity = [&](const ChartPoint& q, double t) -> Vec {
    if (!sys.domain.contains(q)) {
      throw domain_exit_error("geodesic_trace: curve left the chart near parameter " +
                                  std::to_string(t),
                              q.raw().data());
    }
    return sys.frame.evaluate(q) * v.raw();
  };

  GeodesicTrace trace;
  trace.body_velocity = v;
  trace.step_count = step_count;
  trace.t_end = t_end;
  trace.params.reserve(static_cast<std::size_t>(step_count) + 1);
  trace.points.reserve(static_cast<std::size_t>(step_count) + 1);
  trace.params.push_back(0.0);
  trace.points.push_back(p0);

  ChartPoint y = p0;
  for (int k = 0; k < step_count; ++k) {
    const double t = k * h;
    const Vec k1 = velocity(y, t);
    const Vec k2 = velocity(ChartPoint(y.raw() + (0.5 * h) * k1), t + 0.5 * h);
    const Vec k3 = velocity(ChartPoint(y.raw() + (0.5 * h) * k2), t + 0.5 * h);
    const Vec k4 = velocity(ChartPoint(y.raw() + h * k3), t + h);
    y = ChartPoint(y.raw() + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    if (!sys.domain.contains(y)) {
      throw domain_exit_error("geodesic_trace: curve left the chart at parameter " +
                                  std::to_string((k + 1) * h),
                              y.raw().data());
    }
    trace.params.push_back((k + 1) * h);
    trace.points.push_back(y);
  }
  return trace;
}

double geodesic_residual(const PointwiseSystem& sys, const GeodesicTrace& trace) {
  const std::size_t count = trace.points.size();
  if (count < 5) throw usage_error("geodesic_residual: need at least 5 samples");
  const double h = trace.params[1] - trace.params[0];

  // body velocity b = F(gamma)^{-1} gamma' at interior samples
  std::vector<Vec> body(count);
  for (std::size_t i = 1; i + 1 < count; ++i) {
    const Vec tangent =
        (1.0 / (2.0 * h)) * (trace.points[i + 1].raw() - trace.points[i - 1].raw());
    body[i] = solve(sys.frame.evaluate(trace.points[i]), tangent);
  }

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < count; ++i) {
    const Vec rate = (1.0 / (2.0 * h)) * (body[i + 1] - body[i - 1]);
    worst = std::max(worst, rate.norm());
  }
  return worst;
}

} // namespace pacal

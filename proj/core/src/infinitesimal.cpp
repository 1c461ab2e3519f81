#include "pacal/infinitesimal.hpp"

#include <cmath>
#include <random>

#include "pacal/errors.hpp"

namespace pacal {

namespace {
std::function<Vec(double)> dissociation_quotient(const PointwiseSystem& sys, const GroundVector& u,
                                                 const GroundVector& v, const ChartPoint& p) {
  return [&sys, u, v, p](double tau) {
    return (1.0 / tau) * dissociation(sys, tau * u, v, p).raw();
  };
}
} // namespace

GroundVector pseudo_derivative(const PointwiseSystem& sys, const GroundVector& u,
                               const GroundVector& v, const ChartPoint& p, DeltaMode mode,
                               const LimitConfig& cfg) {
  if (mode == DeltaMode::analytic) {
    if (!sys.frame.has_directional()) {
      throw usage_error("pseudo_derivative: analytic mode requires a frame derivative");
    }
    const Mat f = sys.frame_at(p);
    const Mat df = sys.frame.directional(p, f * u.raw());
    return GroundVector(solve(f, df * v.raw()));
  }
  if (u.raw().all_zero() || v.raw().all_zero()) return GroundVector::zeros(sys.dim());
  return GroundVector(
      require_limit(dissociation_quotient(sys, u, v, p), cfg, "pseudo_derivative"));
}

LimitEstimate pseudo_derivative_limit(const PointwiseSystem& sys, const GroundVector& u,
                                      const GroundVector& v, const ChartPoint& p,
                                      const LimitConfig& cfg) {
  return richardson_limit(dissociation_quotient(sys, u, v, p), cfg);
}

Mat ConnectionMap::matrix_of(const GroundVector& u) const {
  const int n = dim();
  if (u.dim() != n) throw usage_error("ConnectionMap::matrix_of: dimension mismatch");
  Mat g = Mat::zeros(n);
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0.0) continue;
    g += u[i] * basis_matrices[static_cast<std::size_t>(i)];
  }
  return g;
}

double ConnectionMap::coefficient(int k, int i, int j) const {
  return basis_matrices[static_cast<std::size_t>(i)](k, j);
}

GroundVector ConnectionMap::apply(const GroundVector& u, const GroundVector& v) const {
  return GroundVector(matrix_of(u) * v.raw());
}

ConnectionMap connection_map(const PointwiseSystem& sys, const ChartPoint& p, DeltaMode mode,
                             const LimitConfig& cfg) {
  const int n = sys.dim();
  ConnectionMap map;
  map.at = p;
  map.basis_matrices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Mat gi(n, n);
    for (int j = 0; j < n; ++j) {
      const GroundVector col = pseudo_derivative(sys, GroundVector::basis(n, i),
                                                 GroundVector::basis(n, j), p, mode, cfg);
      for (int k = 0; k < n; ++k) gi(k, j) = col[k];
    }
    map.basis_matrices.push_back(std::move(gi));
  }
  return map;
}

GroundVector second_pseudo_derivative(const PointwiseSystem& sys, const GroundVector& u,
                                      const GroundVector& v, const GroundVector& w,
                                      const ChartPoint& p, DeltaMode mode, const LimitConfig& cfg) {
  const GroundVector inner = pseudo_derivative(sys, v, w, p, mode, cfg);
  return pseudo_derivative(sys, u, inner, p, mode, cfg);
}

GroundVector torsion(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                     const ChartPoint& p, DeltaMode mode, const LimitConfig& cfg) {
  return pseudo_derivative(sys, u, v, p, mode, cfg) - pseudo_derivative(sys, v, u, p, mode, cfg);
}

GroundVector riemann(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                     const GroundVector& w, const ChartPoint& p, DeltaMode mode,
                     const LimitConfig& cfg) {
  return second_pseudo_derivative(sys, u, v, w, p, mode, cfg) -
         second_pseudo_derivative(sys, v, u, w, p, mode, cfg);
}

GroundVector cumulative(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                        const GroundVector& w, const ChartPoint& p, DeltaMode mode,
                        const LimitConfig& cfg) {
  return torsion(sys, u, v, p, mode, cfg) + riemann(sys, u, v, w, p, mode, cfg);
}

GroundVector scaled_discrete_riemann(const PointwiseSystem& sys, const GroundVector& u,
                                     const GroundVector& v, const GroundVector& w,
                                     const ChartPoint& p, double tau) {
  if (!(tau > 0.0)) throw usage_error("scaled_discrete_riemann: tau must be positive");
  const GroundVector su = tau * u, sv = tau * v;
  const GroundVector anti =
      deviation2(sys, su, sv, w, p) - deviation2(sys, sv, su, w, p);
  return (1.0 / (tau * tau)) * anti;
}

DifferentiabilityReport differentiability_probe(const PointwiseSystem& sys, const ChartPoint& p,
                                                int trials, std::uint64_t seed,
                                                const LimitConfig& cfg) {
  if (trials < 1) throw usage_error("differentiability_probe: trials must be at least 1");
  const int n = sys.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.25, 2.0);

  DifferentiabilityReport report;

  const auto random_vector = [&] {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = dir(rng);
    return GroundVector(x);
  };

  for (int t = 0; t < trials; ++t) {
    const GroundVector u = random_vector();
    const GroundVector u2 = random_vector();
    const GroundVector v = random_vector();
    const double c = scale(rng) * (t % 2 == 0 ? 1.0 : -1.0);

    LimitEstimate eu, eu2, esum, escaled;
    try {
      eu = pseudo_derivative_limit(sys, u, v, p, cfg);
      eu2 = pseudo_derivative_limit(sys, u2, v, p, cfg);
      esum = pseudo_derivative_limit(sys, u + u2, v, p, cfg);
      escaled = pseudo_derivative_limit(sys, c * u, v, p, cfg);
    } catch (const domain_exit_error&) {
      continue;
    }
    ++report.trials;

    const bool all_converged = eu.converged && eu2.converged && esum.converged && escaled.converged;
    if (all_converged) ++report.converged;
    for (const LimitEstimate* e : {&eu, &eu2, &esum, &escaled}) {
      report.worst_limit_err = std::max(report.worst_limit_err, e->err);
    }

    report.additivity_residual = std::max(
        report.additivity_residual, (esum.value - eu.value - eu2.value).norm_inf());
    report.homogeneity_residual = std::max(
        report.homogeneity_residual, (escaled.value - c * eu.value).norm_inf());

    const double tau_last = eu.taus.back();
    report.continuity_residual = std::max(
        report.continuity_residual, tau_last * eu.quotients.back().norm_inf());
  }

  const double band = 100.0 * cfg.tol;
  report.ok = report.trials > 0 && report.converged == report.trials &&
              report.additivity_residual <= band && report.homogeneity_residual <= band &&
              report.continuity_residual <= band;
  return report;
}

} // namespace pacal

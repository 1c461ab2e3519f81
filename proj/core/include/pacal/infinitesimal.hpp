#ifndef PACAL_INFINITESIMAL_HPP
#define PACAL_INFINITESIMAL_HPP

#include <cstdint>
#include <vector>

#include "pacal/discrete.hpp"
#include "pacal/limits.hpp"
#include "pacal/space.hpp"

namespace pacal {

//! How a pseudo-derivative value is obtained.
enum class DeltaMode {
  numeric,  //!< Richardson limit of dissociation(tau u, v, p) / tau
  analytic  //!< F(p)^{-1} dF(p)[F(p) u] v; requires an analytic frame derivative
};

//! Delta_u v(p), the limit of the scaled dissociation: the infinitesimal
//! curvature of the space applied to (u, v).
GroundVector pseudo_derivative(const PointwiseSystem& sys, const GroundVector& u,
                               const GroundVector& v, const ChartPoint& p,
                               DeltaMode mode = DeltaMode::numeric, const LimitConfig& cfg = {});

//! Full limit diagnostics for the pseudo-derivative quotient.
LimitEstimate pseudo_derivative_limit(const PointwiseSystem& sys, const GroundVector& u,
                                      const GroundVector& v, const ChartPoint& p,
                                      const LimitConfig& cfg = {});

//! The connection at a point: matrices Gamma(e_i) assembled from the
//! pseudo-derivative on basis vectors, plus the coefficients Gamma^k_ij.
struct ConnectionMap {
  ChartPoint at;
  std::vector<Mat> basis_matrices; //!< basis_matrices[i] = matrix of Delta_{e_i}

  int dim() const { return at.dim(); }
  //! Matrix of u |-> Delta_u at the point; linear in u.
  Mat matrix_of(const GroundVector& u) const;
  //! Gamma^k_ij: k-th component of Delta_{e_i} e_j.
  double coefficient(int k, int i, int j) const;
  GroundVector apply(const GroundVector& u, const GroundVector& v) const;
};

ConnectionMap connection_map(const PointwiseSystem& sys, const ChartPoint& p,
                             DeltaMode mode = DeltaMode::numeric, const LimitConfig& cfg = {});

//! Delta_u(Delta_v w)(p): the inner pseudo-derivative is frozen at p before
//! the outer limit is taken.
GroundVector second_pseudo_derivative(const PointwiseSystem& sys, const GroundVector& u,
                                      const GroundVector& v, const GroundVector& w,
                                      const ChartPoint& p, DeltaMode mode = DeltaMode::numeric,
                                      const LimitConfig& cfg = {});

//! T_uv(p) = Delta_u v(p) - Delta_v u(p).
GroundVector torsion(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                     const ChartPoint& p, DeltaMode mode = DeltaMode::numeric,
                     const LimitConfig& cfg = {});

//! R_uvw(p) = Delta_u(Delta_v w)(p) - Delta_v(Delta_u w)(p).
GroundVector riemann(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                     const GroundVector& w, const ChartPoint& p,
                     DeltaMode mode = DeltaMode::numeric, const LimitConfig& cfg = {});

//! C_uvw(p) = T_uv(p) + R_uvw(p).
GroundVector cumulative(const PointwiseSystem& sys, const GroundVector& u, const GroundVector& v,
                        const GroundVector& w, const ChartPoint& p,
                        DeltaMode mode = DeltaMode::numeric, const LimitConfig& cfg = {});

//! Antisymmetrized second-order dissociation scaled by tau^2, the discrete
//! bridge to the Riemann curvature:
//! (D_{tau u}(D_{tau v} w) - D_{tau v}(D_{tau u} w)) / tau^2.
GroundVector scaled_discrete_riemann(const PointwiseSystem& sys, const GroundVector& u,
                                     const GroundVector& v, const GroundVector& w,
                                     const ChartPoint& p, double tau);

//! Empirical differentiability report at a point.
struct DifferentiabilityReport {
  int trials = 0;
  int converged = 0;                   //!< limits that met the tolerance
  double worst_limit_err = 0.0;        //!< worst limit error estimate
  double additivity_residual = 0.0;    //!< |Delta_{u+u'}v - Delta_u v - Delta_{u'}v|
  double homogeneity_residual = 0.0;   //!< |Delta_{cu}v - c Delta_u v|
  double continuity_residual = 0.0;    //!< |D_{tau u}v| at the smallest sampled tau
  bool ok = false;
};

//! Samples random directions and probes convergence, additivity, homogeneity
//! and continuity of the pseudo-derivative. Failures are recorded in the
//! report, never thrown.
DifferentiabilityReport differentiability_probe(const PointwiseSystem& sys, const ChartPoint& p,
                                                int trials, std::uint64_t seed,
                                                const LimitConfig& cfg = {});

} // namespace pacal

#endif

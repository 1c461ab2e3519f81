#include "pacal/space.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "pacal/errors.hpp"

namespace pacal {

BoxDomain::BoxDomain(Vec lo, Vec hi) : min(std::move(lo)), max(std::move(hi)) {
  if (min.dim() != max.dim()) throw usage_error("BoxDomain: min/max dimension mismatch");
  for (int i = 0; i < min.dim(); ++i) {
    if (!(min[i] < max[i])) throw usage_error("BoxDomain: min must be strictly below max on every axis");
  }
}

BoxDomain BoxDomain::centered(int dim, double half_width) {
  return BoxDomain(Vec(dim, -half_width), Vec(dim, half_width));
}

bool BoxDomain::contains(const ChartPoint& p) const {
  if (p.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < min[i] || p[i] > max[i]) return false;
  }
  return true;
}

bool BoxDomain::interior(const ChartPoint& p, double margin) const {
  if (p.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < min[i] + margin || p[i] > max[i] - margin) return false;
  }
  return true;
}

bool BoxDomain::contains_box(const BoxDomain& other) const {
  if (other.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (other.min[i] < min[i] || other.max[i] > max[i]) return false;
  }
  return true;
}

namespace {
std::string point_str(const ChartPoint& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

void check_in_domain(const PointwiseSystem& sys, const ChartPoint& p, const char* what) {
  if (p.dim() != sys.dim()) {
    throw usage_error(std::string(what) + ": point dimension mismatch");
  }
  if (!sys.domain.contains(p)) {
    throw domain_exit_error(std::string(what) + ": point " + point_str(p) + " outside the chart",
                            p.raw().data());
  }
}
} // namespace

Mat PointwiseSystem::frame_at(const ChartPoint& p) const {
  check_in_domain(*this, p, "frame_at");
  Mat f = frame.evaluate(p);
  if (f.rows() != dim() || f.cols() != dim()) {
    throw numeric_error("frame_at: frame evaluation returned wrong shape");
  }
  return f;
}

PointwiseSystem canonical_system(const BoxDomain& domain) {
  const int n = domain.dim();
  FrameField frame;
  frame.dim = n;
  frame.evaluate = [n](const ChartPoint&) { return Mat::identity(n); };
  frame.directional = [n](const ChartPoint&, const Vec&) { return Mat::zeros(n); };
  frame.name = "canonical";
  return PointwiseSystem{domain, std::move(frame)};
}

Translation act(const PointwiseSystem& sys, const ChartPoint& p, const GroundVector& v) {
  if (v.dim() != sys.dim()) throw usage_error("act: vector dimension mismatch");
  return Translation(sys.frame_at(p) * v.raw());
}

GroundVector unact(const PointwiseSystem& sys, const ChartPoint& p, const Translation& t) {
  if (t.dim() != sys.dim()) throw usage_error("unact: translation dimension mismatch");
  return GroundVector(solve(sys.frame_at(p), t.raw()));
}

ChartPoint step(const PointwiseSystem& sys, const ChartPoint& p, const GroundVector& v) {
  const ChartPoint q = translate(p, act(sys, p, v));
  if (!sys.domain.contains(q)) {
    throw domain_exit_error("step: displaced point " + point_str(q) + " left the chart",
                            q.raw().data());
  }
  return q;
}

Mat frame_directional_derivative(const PointwiseSystem& sys, const ChartPoint& p, const Vec& w) {
  if (w.dim() != sys.dim()) throw usage_error("frame_directional_derivative: direction dimension mismatch");
  if (sys.frame.has_directional()) {
    check_in_domain(sys, p, "frame_directional_derivative");
    return sys.frame.directional(p, w);
  }

  const int n = sys.dim();
  LimitConfig cfg;
  cfg.h0 = 1e-3 * (1.0 + p.raw().norm());
  cfg.levels = 4;
  cfg.tol = 1e-8;
  cfg.symmetric = true;

  const auto quotient = [&](double h) {
    const ChartPoint fwd = translate(p, Translation(h * w));
    const ChartPoint bwd = translate(p, Translation(-h * w));
    check_in_domain(sys, fwd, "frame_directional_derivative");
    check_in_domain(sys, bwd, "frame_directional_derivative");
    const Mat diff = sys.frame.evaluate(fwd) - sys.frame.evaluate(bwd);
    Vec flat(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[i * n + j] = diff(i, j) / (2.0 * h);
    return flat;
  };

  const Vec flat = require_limit(quotient, cfg, "frame_directional_derivative");
  Mat d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = flat[i * n + j];
  return d;
}

GroundVector flatness_residual(const PointwiseSystem& sys, const ChartPoint& p,
                               const GroundVector& u, const GroundVector& v) {
  const ChartPoint q = step(sys, p, u);
  return unact(sys, p, act(sys, q, v)) - v;
}

FlatnessReport is_affine_flat(const PointwiseSystem& sys, int sample_count, std::uint64_t seed,
                              double tol) {
  if (sample_count < 1) throw usage_error("is_affine_flat: sample_count must be at least 1");
  const int n = sys.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> dir(-1.0, 1.0);

  FlatnessReport report;
  report.tol = tol;
  report.flat = true;
  report.witness_p = ChartPoint::zeros(n);
  report.witness_u = GroundVector::zeros(n);
  report.witness_v = GroundVector::zeros(n);

  int accepted = 0;
  while (accepted < sample_count) {
    Vec pv(n), uv(n), vv(n);
    for (int i = 0; i < n; ++i) {
      pv[i] = sys.domain.min[i] + unit(rng) * (sys.domain.max[i] - sys.domain.min[i]);
      uv[i] = 0.5 * dir(rng);
      vv[i] = dir(rng);
    }
    const ChartPoint p{Vec(pv)};
    const GroundVector u{Vec(uv)}, v{Vec(vv)};
    double r = 0.0;
    try {
      r = norm(flatness_residual(sys, p, u, v));
    } catch (const domain_exit_error&) {
      ++report.resampled;
      continue;
    }
    ++accepted;
    if (r > report.max_residual) {
      report.max_residual = r;
      report.witness_p = p;
      report.witness_u = u;
      report.witness_v = v;
    }
  }
  report.samples = accepted;
  report.flat = report.max_residual <= tol;
  return report;
}

} // namespace pacal

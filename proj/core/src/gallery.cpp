#include "pacal/gallery.hpp"

#include <cmath>
#include <memory>
#include <random>

#include "pacal/errors.hpp"

namespace pacal {

GalleryKind gallery_kind_from_string(const std::string& s) {
  if (s == "flat") return GalleryKind::flat;
  if (s == "rotation2d") return GalleryKind::rotation2d;
  if (s == "scaling") return GalleryKind::scaling;
  if (s == "mixed_exp2d") return GalleryKind::mixed_exp2d;
  if (s == "polynomial") return GalleryKind::polynomial;
  if (s == "kink") return GalleryKind::kink;
  throw usage_error("unknown gallery kind: " + s);
}

std::string to_string(GalleryKind kind) {
  switch (kind) {
    case GalleryKind::flat: return "flat";
    case GalleryKind::rotation2d: return "rotation2d";
    case GalleryKind::scaling: return "scaling";
    case GalleryKind::mixed_exp2d: return "mixed_exp2d";
    case GalleryKind::polynomial: return "polynomial";
    case GalleryKind::kink: return "kink";
  }
  throw usage_error("unknown gallery kind enum value");
}

GroundVector GallerySpace::oracle_torsion(const GroundVector& u, const GroundVector& v,
                                          const ChartPoint& p) const {
  if (!has_connection_oracle) throw usage_error("gallery space has no connection oracle");
  return GroundVector(oracle_connection(p, u) * v.raw() - oracle_connection(p, v) * u.raw());
}

GroundVector GallerySpace::oracle_riemann(const GroundVector& u, const GroundVector& v,
                                          const GroundVector& w, const ChartPoint& p) const {
  if (!has_connection_oracle) throw usage_error("gallery space has no connection oracle");
  return GroundVector(commutator(oracle_connection(p, u), oracle_connection(p, v)) * w.raw());
}

namespace {

// Monomial term of a polynomial frame: coeff * prod_i p_i^{e_i} times a matrix.
struct MonomialMatrix {
  std::vector<int> exponents;
  Mat matrix;
};

double monomial_value(const std::vector<int>& exponents, const ChartPoint& p) {
  double m = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (int k = 0; k < exponents[i]; ++k) m *= p[static_cast<int>(i)];
  }
  return m;
}

double monomial_directional(const std::vector<int>& exponents, const ChartPoint& p, const Vec& w) {
  double d = 0.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    double part = static_cast<double>(exponents[i]);
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      const int e = exponents[j] - (j == i ? 1 : 0);
      for (int k = 0; k < e; ++k) part *= p[static_cast<int>(j)];
    }
    d += part * w[static_cast<int>(i)];
  }
  return d;
}

void append_exponents(std::vector<std::vector<int>>& out, std::vector<int>& cur, int axis,
                      int remaining) {
  if (axis == static_cast<int>(cur.size())) {
    int total = 0;
    for (int e : cur) total += e;
    if (total >= 1) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(axis)] = e;
    append_exponents(out, cur, axis + 1, remaining - e);
  }
}

std::vector<std::vector<int>> monomial_exponents(int dim, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  append_exponents(out, cur, 0, degree);
  return out;
}

void prescan_frame(const PointwiseSystem& sys) {
  // coarse grid check that the frame stays comfortably invertible
  const int n = sys.dim();
  const int per_axis = 5;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Vec x(n);
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(idx[static_cast<std::size_t>(i)]) / (per_axis - 1);
      x[i] = sys.domain.min[i] + t * (sys.domain.max[i] - sys.domain.min[i]);
    }
    const ChartPoint p{x};
    const Mat f = sys.frame.evaluate(p);
    bool finite = true;
    for (int i = 0; i < n && finite; ++i)
      for (int j = 0; j < n && finite; ++j) finite = std::isfinite(f(i, j));
    if (!finite) throw numeric_error("gallery frame not finite on the requested domain");
    try {
      LuSolver lu(f);
      if (!(lu.rcond() >= 1e-10)) {
        throw numeric_error("gallery frame nearly singular on the requested domain");
      }
    } catch (const numeric_error&) {
      throw numeric_error("gallery frame singular or nearly singular on the requested domain");
    }
    int axis = 0;
    while (axis < n) {
      if (++idx[static_cast<std::size_t>(axis)] < per_axis) break;
      idx[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == n) break;
  }
}

Vec require_param(const std::vector<double>& p, int dim, const char* kind, const char* name) {
  if (static_cast<int>(p.size()) != dim) {
    throw usage_error(std::string(kind) + ": parameter " + name + " must have " +
                      std::to_string(dim) + " components");
  }
  return Vec(std::vector<double>(p));
}

} // namespace

GallerySpace build_gallery(const GallerySpec& spec) {
  GallerySpace out;
  out.spec = spec;
  const int n = spec.dim;
  if (n < 1) throw usage_error("gallery: dim must be at least 1");

  const auto domain_or = [&](double half_width) {
    return spec.domain ? *spec.domain : BoxDomain::centered(n, half_width);
  };

  FrameField frame;
  frame.dim = n;

  switch (spec.kind) {
    case GalleryKind::flat: {
      frame.name = "flat";
      frame.evaluate = [n](const ChartPoint&) { return Mat::identity(n); };
      frame.directional = [n](const ChartPoint&, const Vec&) { return Mat::zeros(n); };
      out.system = PointwiseSystem{domain_or(3.0), frame};
      out.has_connection_oracle = true;
      out.oracle_connection = [n](const ChartPoint&, const GroundVector&) { return Mat::zeros(n); };
      break;
    }

    case GalleryKind::rotation2d: {
      if (n != 2) throw usage_error("rotation2d: dim must be 2");
      const Vec omega = require_param(spec.omega, 2, "rotation2d", "omega");
      frame.name = "rotation2d";
      frame.params = omega.data();
      frame.evaluate = [omega](const ChartPoint& p) {
        return Mat::rotation2(omega.dot(p.raw()));
      };
      frame.directional = [omega](const ChartPoint& p, const Vec& w) {
        return omega.dot(w) * (Mat::rotation_generator2() * Mat::rotation2(omega.dot(p.raw())));
      };
      out.system = PointwiseSystem{domain_or(3.0), frame};
      out.has_connection_oracle = true;
      out.oracle_connection = [omega](const ChartPoint& p, const GroundVector& u) {
        const Vec d = Mat::rotation2(omega.dot(p.raw())) * u.raw();
        return omega.dot(d) * Mat::rotation_generator2();
      };
      break;
    }

    case GalleryKind::scaling: {
      const Vec lambda = require_param(spec.lambda, n, "scaling", "lambda");
      frame.name = "scaling";
      frame.params = lambda.data();
      frame.evaluate = [lambda, n](const ChartPoint& p) {
        return std::exp(lambda.dot(p.raw())) * Mat::identity(n);
      };
      frame.directional = [lambda, n](const ChartPoint& p, const Vec& w) {
        return lambda.dot(w) * std::exp(lambda.dot(p.raw())) * Mat::identity(n);
      };
      out.system = PointwiseSystem{domain_or(2.0), frame};
      out.has_connection_oracle = true;
      out.oracle_connection = [lambda, n](const ChartPoint& p, const GroundVector& u) {
        const Vec d = std::exp(lambda.dot(p.raw())) * u.raw();
        return lambda.dot(d) * Mat::identity(n);
      };
      break;
    }

    case GalleryKind::mixed_exp2d: {
      if (n != 2) throw usage_error("mixed_exp2d: dim must be 2");
      const Mat x = spec.generator_x ? *spec.generator_x : Mat::rotation_generator2();
      const Mat y = spec.generator_y ? *spec.generator_y : Mat{{1.0, 0.0}, {0.0, -1.0}};
      if (x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2) {
        throw usage_error("mixed_exp2d: generators must be 2x2");
      }
      frame.name = "mixed_exp2d";
      const auto exp_x = [x](double t) { return mat_exp(t * x); };
      const auto exp_y = [y](double t) { return mat_exp(t * y); };
      frame.evaluate = [exp_x, exp_y](const ChartPoint& p) { return exp_x(p[0]) * exp_y(p[1]); };
      frame.directional = [x, y, exp_x, exp_y](const ChartPoint& p, const Vec& w) {
        const Mat e1 = exp_x(p[0]), e2 = exp_y(p[1]);
        return w[0] * (x * e1 * e2) + w[1] * (e1 * y * e2);
      };
      out.system = PointwiseSystem{domain_or(1.5), frame};
      out.has_connection_oracle = true;
      out.oracle_connection = [x, y, exp_x, exp_y](const ChartPoint& p, const GroundVector& u) {
        const Mat f = exp_x(p[0]) * exp_y(p[1]);
        const Vec d = f * u.raw();
        const Mat conj_x = exp_y(-p[1]) * x * exp_y(p[1]);
        return d[0] * conj_x + d[1] * y;
      };
      break;
    }

    case GalleryKind::polynomial: {
      if (spec.degree < 1) throw usage_error("polynomial: degree must be at least 1");
      if (spec.coefficient_cap < 0.0) throw usage_error("polynomial: coefficient_cap must be nonnegative");
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      const double cap = spec.coefficient_cap;
      auto terms = std::make_shared<std::vector<MonomialMatrix>>();
      for (const auto& e : monomial_exponents(n, spec.degree)) {
        MonomialMatrix t;
        t.exponents = e;
        t.matrix = Mat(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) t.matrix(i, j) = cap * unit(rng);
        terms->push_back(std::move(t));
      }
      frame.name = "polynomial";
      frame.evaluate = [terms, n](const ChartPoint& p) {
        Mat f = Mat::identity(n);
        for (const auto& t : *terms) f += monomial_value(t.exponents, p) * t.matrix;
        return f;
      };
      frame.directional = [terms, n](const ChartPoint& p, const Vec& w) {
        Mat d = Mat::zeros(n);
        for (const auto& t : *terms) d += monomial_directional(t.exponents, p, w) * t.matrix;
        return d;
      };
      out.system = PointwiseSystem{domain_or(1.0), frame};
      out.has_connection_oracle = false;
      break;
    }

    case GalleryKind::kink: {
      frame.name = "kink";
      frame.evaluate = [n](const ChartPoint& p) {
        return (1.0 + std::abs(p[0])) * Mat::identity(n);
      };
      // no analytic derivative: the frame has a crease across p1 = 0
      out.system = PointwiseSystem{domain_or(1.0), frame};
      out.has_connection_oracle = false;
      break;
    }
  }

  prescan_frame(out.system);
  return out;
}

} // namespace pacal

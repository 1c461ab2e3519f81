#include "pacal/fields.hpp"

#include <cmath>

#include "pacal/errors.hpp"

namespace pacal {

ScalarFieldHandle constant_scalar_field(int dim, double value) {
  return {dim, [value](const ChartPoint&) { return value; }};
}

VectorFieldHandle constant_vector_field(int dim, GroundVector value) {
  if (value.dim() != dim) throw usage_error("constant_vector_field: dimension mismatch");
  return {dim, [value](const ChartPoint&) { return value; }};
}

CovectorFieldHandle constant_covector_field(int dim, Covector value) {
  if (value.dim() != dim) throw usage_error("constant_covector_field: dimension mismatch");
  return {dim, [value](const ChartPoint&) { return value; }};
}

double evaluate_polynomial(const Polynomial& poly, const Vec& x) {
  double sum = 0.0;
  for (const Monomial& m : poly) {
    double term = m.coeff;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      for (int k = 0; k < m.exponents[i]; ++k) term *= x[static_cast<int>(i)];
    }
    sum += term;
  }
  return sum;
}

namespace {
void check_poly(const Polynomial& poly, int dim, const char* what) {
  for (const Monomial& m : poly) {
    if (static_cast<int>(m.exponents.size()) != dim) {
      throw usage_error(std::string(what) + ": monomial exponent tuple must match dim");
    }
    for (int e : m.exponents) {
      if (e < 0) throw usage_error(std::string(what) + ": negative exponent");
    }
  }
}
} // namespace

ScalarFieldHandle polynomial_scalar_field(int dim, Polynomial poly) {
  check_poly(poly, dim, "polynomial_scalar_field");
  return {dim, [poly = std::move(poly)](const ChartPoint& p) {
            return evaluate_polynomial(poly, p.raw());
          }};
}

VectorFieldHandle polynomial_vector_field(int dim, std::vector<Polynomial> components) {
  if (static_cast<int>(components.size()) != dim) {
    throw usage_error("polynomial_vector_field: need one component polynomial per axis");
  }
  for (const auto& c : components) check_poly(c, dim, "polynomial_vector_field");
  return {dim, [components = std::move(components), dim](const ChartPoint& p) {
            Vec out(dim);
            for (int i = 0; i < dim; ++i) out[i] = evaluate_polynomial(components[static_cast<std::size_t>(i)], p.raw());
            return GroundVector(out);
          }};
}

CovectorFieldHandle polynomial_covector_field(int dim, std::vector<Polynomial> components) {
  if (static_cast<int>(components.size()) != dim) {
    throw usage_error("polynomial_covector_field: need one component polynomial per axis");
  }
  for (const auto& c : components) check_poly(c, dim, "polynomial_covector_field");
  return {dim, [components = std::move(components), dim](const ChartPoint& p) {
            Vec out(dim);
            for (int i = 0; i < dim; ++i) out[i] = evaluate_polynomial(components[static_cast<std::size_t>(i)], p.raw());
            return Covector(out);
          }};
}

ScalarFieldHandle expression_scalar_field(int dim, const std::string& source) {
  Expression e = Expression::parse(source, dim);
  return {dim, [e = std::move(e)](const ChartPoint& p) { return e.evaluate(p.raw()); }};
}

namespace {
std::vector<Expression> parse_components(int dim, const std::vector<std::string>& components,
                                         const char* what) {
  if (static_cast<int>(components.size()) != dim) {
    throw usage_error(std::string(what) + ": need exactly " + std::to_string(dim) +
                      " component expressions");
  }
  std::vector<Expression> parsed;
  parsed.reserve(components.size());
  for (const std::string& c : components) parsed.push_back(Expression::parse(c, dim));
  return parsed;
}
} // namespace

VectorFieldHandle expression_vector_field(int dim, const std::vector<std::string>& components) {
  auto parsed = parse_components(dim, components, "expression_vector_field");
  return {dim, [parsed = std::move(parsed), dim](const ChartPoint& p) {
            Vec out(dim);
            for (int i = 0; i < dim; ++i) out[i] = parsed[static_cast<std::size_t>(i)].evaluate(p.raw());
            return GroundVector(out);
          }};
}

CovectorFieldHandle expression_covector_field(int dim, const std::vector<std::string>& components) {
  auto parsed = parse_components(dim, components, "expression_covector_field");
  return {dim, [parsed = std::move(parsed), dim](const ChartPoint& p) {
            Vec out(dim);
            for (int i = 0; i < dim; ++i) out[i] = parsed[static_cast<std::size_t>(i)].evaluate(p.raw());
            return Covector(out);
          }};
}

VectorFieldHandle add_fields(const VectorFieldHandle& a, const VectorFieldHandle& b) {
  if (a.dim != b.dim) throw usage_error("add_fields: dimension mismatch");
  return {a.dim, [a, b](const ChartPoint& p) { return a.eval(p) + b.eval(p); }};
}

VectorFieldHandle scale_field(double s, const VectorFieldHandle& a) {
  return {a.dim, [s, a](const ChartPoint& p) { return s * a.eval(p); }};
}

VectorFieldHandle scalar_times_vector(const ScalarFieldHandle& phi, const VectorFieldHandle& v) {
  if (phi.dim != v.dim) throw usage_error("scalar_times_vector: dimension mismatch");
  return {v.dim, [phi, v](const ChartPoint& p) { return phi.eval(p) * v.eval(p); }};
}

ScalarFieldHandle pairing_field(const CovectorFieldHandle& phi, const VectorFieldHandle& v) {
  if (phi.dim != v.dim) throw usage_error("pairing_field: dimension mismatch");
  return {v.dim, [phi, v](const ChartPoint& p) { return pair(phi.eval(p), v.eval(p)); }};
}

} // namespace pacal

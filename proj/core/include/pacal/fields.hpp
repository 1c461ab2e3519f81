#ifndef PACAL_FIELDS_HPP
#define PACAL_FIELDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pacal/affine.hpp"
#include "pacal/expression.hpp"
#include "pacal/space.hpp"

namespace pacal {

//! Immutable evaluatable fields on a chart. Handles must be pure and total on
//! the domain they are used with; derivative limits sample nearby points
//! unconditionally.
struct ScalarFieldHandle {
  int dim = 0;
  std::function<double(const ChartPoint&)> eval;
};

struct VectorFieldHandle {
  int dim = 0;
  std::function<GroundVector(const ChartPoint&)> eval;
};

struct CovectorFieldHandle {
  int dim = 0;
  std::function<Covector(const ChartPoint&)> eval;
};

//! Field of points of another chart. The target box, when known, lets the
//! reduced derivative check chart containment up front.
struct PointFieldHandle {
  int dim = 0;
  std::function<ChartPoint(const ChartPoint&)> eval;
  std::optional<BoxDomain> target_domain;
};

// constant fields
ScalarFieldHandle constant_scalar_field(int dim, double value);
VectorFieldHandle constant_vector_field(int dim, GroundVector value);
CovectorFieldHandle constant_covector_field(int dim, Covector value);

//! One term of a polynomial: coeff * prod_i x_i^{exponents[i]}.
struct Monomial {
  double coeff = 0.0;
  std::vector<int> exponents;
};
using Polynomial = std::vector<Monomial>;

double evaluate_polynomial(const Polynomial& poly, const Vec& x);

ScalarFieldHandle polynomial_scalar_field(int dim, Polynomial poly);
VectorFieldHandle polynomial_vector_field(int dim, std::vector<Polynomial> components);
CovectorFieldHandle polynomial_covector_field(int dim, std::vector<Polynomial> components);

// expression-backed fields (one expression string per component)
ScalarFieldHandle expression_scalar_field(int dim, const std::string& source);
VectorFieldHandle expression_vector_field(int dim, const std::vector<std::string>& components);
CovectorFieldHandle expression_covector_field(int dim, const std::vector<std::string>& components);

// pointwise combinators used by the derivative identities
VectorFieldHandle add_fields(const VectorFieldHandle& a, const VectorFieldHandle& b);
VectorFieldHandle scale_field(double s, const VectorFieldHandle& a);
//! The field p |-> phi(p) * v(p).
VectorFieldHandle scalar_times_vector(const ScalarFieldHandle& phi, const VectorFieldHandle& v);
//! The scalar field p |-> phi(p)(v(p)).
ScalarFieldHandle pairing_field(const CovectorFieldHandle& phi, const VectorFieldHandle& v);

} // namespace pacal

#endif

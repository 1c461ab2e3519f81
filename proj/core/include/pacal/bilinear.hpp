#ifndef PACAL_BILINEAR_HPP
#define PACAL_BILINEAR_HPP

#include <functional>
#include <string>

#include "pacal/linalg.hpp"

namespace pacal {

//! The bilinear products the derivative product rules are stated for.
//! Multivector-valued products are flattened to coefficient vectors in a
//! fixed lexicographic blade order.
enum class BilinearKind {
  scalar_product,    //!< (a, b) -> a b on 1-dimensional operands
  inner_product,     //!< Euclidean dot product
  cross_product,     //!< n = 3 only
  tensor_product,    //!< n^2 coefficients, row-major
  exterior_product,  //!< n(n-1)/2 coefficients, blades e_i^e_j with i < j
  geometric_product, //!< scalar part then bivector part: 1 + n(n-1)/2 coefficients
  pairing            //!< covector applied to vector, scalar result
};

BilinearKind bilinear_kind_from_string(const std::string& s);
std::string to_string(BilinearKind kind);

//! A concrete bilinear map over coordinate tuples of a fixed dimension.
struct BilinearMapHandle {
  BilinearKind kind = BilinearKind::inner_product;
  int operand_dim = 0;
  int result_dim = 0;
  std::function<Vec(const Vec&, const Vec&)> apply;
};

//! Builds the handle for a product kind; cross products require dim == 3 and
//! the scalar product requires dim == 1.
BilinearMapHandle make_bilinear(BilinearKind kind, int dim);

} // namespace pacal

#endif

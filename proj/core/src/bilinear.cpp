#include "pacal/bilinear.hpp"

#include "pacal/errors.hpp"

namespace pacal {

BilinearKind bilinear_kind_from_string(const std::string& s) {
  if (s == "scalar_product") return BilinearKind::scalar_product;
  if (s == "inner_product") return BilinearKind::inner_product;
  if (s == "cross_product") return BilinearKind::cross_product;
  if (s == "tensor_product") return BilinearKind::tensor_product;
  if (s == "exterior_product") return BilinearKind::exterior_product;
  if (s == "geometric_product") return BilinearKind::geometric_product;
  if (s == "pairing") return BilinearKind::pairing;
  throw usage_error("unknown bilinear kind: " + s);
}

std::string to_string(BilinearKind kind) {
  switch (kind) {
    case BilinearKind::scalar_product: return "scalar_product";
    case BilinearKind::inner_product: return "inner_product";
    case BilinearKind::cross_product: return "cross_product";
    case BilinearKind::tensor_product: return "tensor_product";
    case BilinearKind::exterior_product: return "exterior_product";
    case BilinearKind::geometric_product: return "geometric_product";
    case BilinearKind::pairing: return "pairing";
  }
  throw usage_error("unknown bilinear kind enum value");
}

BilinearMapHandle make_bilinear(BilinearKind kind, int dim) {
  if (dim < 1) throw usage_error("make_bilinear: dim must be at least 1");
  BilinearMapHandle h;
  h.kind = kind;
  h.operand_dim = dim;

  switch (kind) {
    case BilinearKind::scalar_product:
      if (dim != 1) throw usage_error("scalar_product: operands must be 1-dimensional");
      h.result_dim = 1;
      h.apply = [](const Vec& a, const Vec& b) { return Vec{a[0] * b[0]}; };
      break;

    case BilinearKind::inner_product:
    case BilinearKind::pairing:
      h.result_dim = 1;
      h.apply = [](const Vec& a, const Vec& b) { return Vec{a.dot(b)}; };
      break;

    case BilinearKind::cross_product:
      if (dim != 3) throw usage_error("cross_product: only defined for dim == 3");
      h.result_dim = 3;
      h.apply = [](const Vec& a, const Vec& b) {
        return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]};
      };
      break;

    case BilinearKind::tensor_product:
      h.result_dim = dim * dim;
      h.apply = [dim](const Vec& a, const Vec& b) {
        Vec out(dim * dim);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) out[i * dim + j] = a[i] * b[j];
        return out;
      };
      break;

    case BilinearKind::exterior_product:
      h.result_dim = dim * (dim - 1) / 2;
      h.apply = [dim](const Vec& a, const Vec& b) {
        Vec out(dim * (dim - 1) / 2);
        int k = 0;
        for (int i = 0; i < dim; ++i)
          for (int j = i + 1; j < dim; ++j) out[k++] = a[i] * b[j] - a[j] * b[i];
        return out;
      };
      break;

    case BilinearKind::geometric_product:
      // product of two grade-1 vectors: <a,b> plus the bivector a^b
      h.result_dim = 1 + dim * (dim - 1) / 2;
      h.apply = [dim](const Vec& a, const Vec& b) {
        Vec out(1 + dim * (dim - 1) / 2);
        out[0] = a.dot(b);
        int k = 1;
        for (int i = 0; i < dim; ++i)
          for (int j = i + 1; j < dim; ++j) out[k++] = a[i] * b[j] - a[j] * b[i];
        return out;
      };
      break;
  }
  return h;
}

} // namespace pacal

#include "pacal/affine.hpp"

namespace pacal {

namespace {
void check_dims(int a, int b, const char* what) {
  if (a != b) {
    throw usage_error(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
  }
}
} // namespace

Translation Interval::translation() const { return between(to, from); }

ChartPoint translate(const ChartPoint& p, const Translation& t) {
  check_dims(p.dim(), t.dim(), "translate");
  return ChartPoint(p.raw() + t.raw());
}

Translation between(const ChartPoint& q, const ChartPoint& p) {
  check_dims(q.dim(), p.dim(), "between");
  return Translation(q.raw() - p.raw());
}

Translation weyl_residual(const ChartPoint& p, const ChartPoint& q, const ChartPoint& r) {
  return between(r, q) + between(q, p) - between(r, p);
}

Translation four_point_residual(const ChartPoint& p, const ChartPoint& q, const ChartPoint& r,
                                const ChartPoint& s) {
  return (between(p, q) - between(s, r)) - (between(p, s) - between(q, r));
}

GroundVector vectorize_at(const ChartPoint& p, const ChartPoint& q, const Mat& action) {
  check_dims(p.dim(), q.dim(), "vectorize_at");
  check_dims(action.cols(), p.dim(), "vectorize_at");
  return GroundVector(solve(action, between(p, q).raw()));
}

} // namespace pacal

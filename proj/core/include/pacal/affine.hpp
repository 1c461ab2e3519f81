#ifndef PACAL_AFFINE_HPP
#define PACAL_AFFINE_HPP

#include <utility>

#include "pacal/errors.hpp"
#include "pacal/linalg.hpp"

namespace pacal {

//! Coordinate tuple with a phantom tag, so that points, ground vectors,
//! translations and covectors cannot be mixed accidentally.
template <class Tag>
class CoordTuple {
public:
  CoordTuple() = default;
  explicit CoordTuple(Vec v) : v_(std::move(v)) {}
  CoordTuple(std::initializer_list<double> xs) : v_(xs) {}

  static CoordTuple zeros(int n) { return CoordTuple(Vec::zeros(n)); }
  static CoordTuple basis(int n, int i) { return CoordTuple(Vec::basis(n, i)); }

  int dim() const { return v_.dim(); }
  double operator[](int i) const { return v_[i]; }
  double& operator[](int i) { return v_[i]; }
  const Vec& raw() const { return v_; }

  friend bool operator==(const CoordTuple& a, const CoordTuple& b) { return a.v_ == b.v_; }

private:
  Vec v_;
};

struct ground_tag {};
struct translation_tag {};
struct point_tag {};
struct covector_tag {};

//! Element of the ground space V.
using GroundVector = CoordTuple<ground_tag>;
//! Displacement acting on chart points; composition is commutative addition.
using Translation = CoordTuple<translation_tag>;
//! Point of the chart A.
using ChartPoint = CoordTuple<point_tag>;
//! Element of V*, acting on ground vectors by the dot pairing.
using Covector = CoordTuple<covector_tag>;

// Linear-space arithmetic for the tags that form vector spaces. Points are
// deliberately excluded; they move only by translate().
template <class Tag>
concept LinearTag = !std::is_same_v<Tag, point_tag>;

template <class Tag>
  requires LinearTag<Tag>
CoordTuple<Tag> operator+(const CoordTuple<Tag>& a, const CoordTuple<Tag>& b) {
  return CoordTuple<Tag>(a.raw() + b.raw());
}
template <class Tag>
  requires LinearTag<Tag>
CoordTuple<Tag> operator-(const CoordTuple<Tag>& a, const CoordTuple<Tag>& b) {
  return CoordTuple<Tag>(a.raw() - b.raw());
}
template <class Tag>
  requires LinearTag<Tag>
CoordTuple<Tag> operator-(const CoordTuple<Tag>& a) {
  return CoordTuple<Tag>(-a.raw());
}
template <class Tag>
  requires LinearTag<Tag>
CoordTuple<Tag> operator*(double s, const CoordTuple<Tag>& a) {
  return CoordTuple<Tag>(s * a.raw());
}
template <class Tag>
  requires LinearTag<Tag>
CoordTuple<Tag> operator*(const CoordTuple<Tag>& a, double s) {
  return CoordTuple<Tag>(s * a.raw());
}

inline double norm(const Vec& v) { return v.norm(); }
template <class Tag>
double norm(const CoordTuple<Tag>& t) {
  return t.raw().norm();
}
template <class Tag>
double norm_inf(const CoordTuple<Tag>& t) {
  return t.raw().norm_inf();
}

//! Dot pairing of a covector with a ground vector.
inline double pair(const Covector& phi, const GroundVector& v) { return phi.raw().dot(v.raw()); }

//! Directed pair of points; determines exactly one translation.
struct Interval {
  ChartPoint from;
  ChartPoint to;
  Translation translation() const;
};

//! The point reached from p by the displacement t.
ChartPoint translate(const ChartPoint& p, const Translation& t);

//! The unique translation with translate(p, result) = q.
Translation between(const ChartPoint& q, const ChartPoint& p);

//! (r <- q) + (q <- p) - (r <- p); identically the zero translation.
Translation weyl_residual(const ChartPoint& p, const ChartPoint& q, const ChartPoint& r);

//! ((p <- q) - (s <- r)) - ((p <- s) - (q <- r)); identically zero in any
//! point space.
Translation four_point_residual(const ChartPoint& p, const ChartPoint& q, const ChartPoint& r,
                                const ChartPoint& s);

//! action^{-1}(p <- q), the vectorization of q at base point p. Note the
//! direction: the translation runs from q to p, so vectorize_at(p, q, id)
//! equals p - q, not q - p.
GroundVector vectorize_at(const ChartPoint& p, const ChartPoint& q, const Mat& action);

} // namespace pacal

#endif

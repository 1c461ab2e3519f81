#ifndef PACAL_GALLERY_HPP
#define PACAL_GALLERY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pacal/space.hpp"

namespace pacal {

enum class GalleryKind {
  flat,       //!< F = I
  rotation2d, //!< F(p) = R(omega . p)
  scaling,    //!< F(p) = exp(lambda . p) I
  mixed_exp2d,//!< F(p) = exp(p1 X) exp(p2 Y), X and Y noncommuting generators
  polynomial, //!< F(p) = I + sum of random small-coefficient monomial matrices
  kink        //!< F(p) = (1 + |p1|) I; not differentiable across p1 = 0
};

GalleryKind gallery_kind_from_string(const std::string& s);
std::string to_string(GalleryKind kind);

//! Construction recipe for a canonical example space.
struct GallerySpec {
  GalleryKind kind = GalleryKind::flat;
  int dim = 2;
  std::optional<BoxDomain> domain; //!< kind-specific default when absent
  std::vector<double> omega;       //!< rotation2d
  std::vector<double> lambda;      //!< scaling
  std::optional<Mat> generator_x;  //!< mixed_exp2d; default J
  std::optional<Mat> generator_y;  //!< mixed_exp2d; default diag(1, -1)
  std::uint64_t seed = 1;          //!< polynomial
  int degree = 2;                  //!< polynomial
  double coefficient_cap = 0.1;    //!< polynomial; magnitude bound per monomial
};

//! A built example space. When the frame has a closed-form connection the
//! oracle members give ground-truth values for the curvature tensors.
struct GallerySpace {
  PointwiseSystem system;
  GallerySpec spec;

  bool has_connection_oracle = false;
  //! Closed-form matrix of u |-> Delta_u at p (so oracle_connection(p,u) * v
  //! is the exact pseudo-derivative).
  std::function<Mat(const ChartPoint&, const GroundVector&)> oracle_connection;

  GroundVector oracle_torsion(const GroundVector& u, const GroundVector& v,
                              const ChartPoint& p) const;
  GroundVector oracle_riemann(const GroundVector& u, const GroundVector& v,
                              const GroundVector& w, const ChartPoint& p) const;
};

//! Validates the spec, constructs the frame with its analytic derivative, and
//! pre-scans a coarse grid for near-singular frames.
GallerySpace build_gallery(const GallerySpec& spec);

} // namespace pacal

#endif

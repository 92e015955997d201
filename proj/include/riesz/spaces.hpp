#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riesz/common.hpp"

namespace riesz {

enum class Family { Sphere, RealProj, ComplexProj, QuatProj, OctoProj };
enum class Field { Real, Complex, Quat };

// One of the compact connected two-point homogeneous spaces, identified by
// family and (projective or sphere) dimension d. The Jacobi parameters
// (alpha, beta) and the real manifold dimension D derive from those two.
class Space {
 public:
  Space(Family family, int d);

  // Spec-string form: S:<d>, RP:<d>, CP:<d>, HP:<d>, OP:<d>.
  static Space parse(std::string_view spec);
  std::string spec() const;

  Family family() const { return family_; }
  int d() const { return d_; }
  bool projective() const { return family_ != Family::Sphere; }

  double alpha() const;
  double beta() const;
  int dim() const;  // D = 2*alpha + 2

  // Base field of point coordinates; throws Unsupported for OctoProj, which
  // exists at the (alpha, beta) level only.
  Field field() const;
  int field_dim() const;                 // reals per coordinate
  int ambient_real_dim() const;          // (d+1) * field_dim

  bool operator==(const Space& o) const { return family_ == o.family_ && d_ == o.d_; }

 private:
  Family family_;
  int d_;
};

// Unit vector over the space's base field, stored as flat reals (complex
// interleaved re/im, quaternions as 4-tuples). Projective points are kept in
// a canonical gauge: the first coordinate with nonnegligible modulus is made
// real and positive, so representatives compare deterministically.
class Point {
 public:
  Point(const Space& space, std::vector<double> coords);

  const Space& space() const { return space_; }
  const std::vector<double>& coords() const { return coords_; }

  static Point random(const Space& space, Rng& rng);

 private:
  Space space_;
  std::vector<double> coords_;
};

// Geodesic distance in [0, pi]: arccos(x.y) on spheres,
// arccos(2|<x,y>|^2 - 1) on projective spaces.
double geodesic_distance(const Space& space, const Point& x, const Point& y);

// sin(theta/2), times 2 on the sphere family (Euclidean distance).
double chordal_distance(const Space& space, const Point& x, const Point& y);

// Modulus of the base-field Hermitian inner product of representers.
double inner_modulus(const Space& space, const Point& x, const Point& y);

// FP^1 -> S^D isometry. (a, b) is a representative pair of field elements,
// each given as field_dim reals; the pair must be nonzero and is normalized
// internally. Returns a point on the sphere of dimension D = dim_R(F).
Point isometry_tau(Field field, std::span<const double> a, std::span<const double> b);

// Geodesic distance on FP^1 straight from representative pairs,
// cos(theta) = 2|a1*.a2 + b1*.b2|^2 - 1.
double fp1_geodesic(Field field, std::span<const double> a1, std::span<const double> b1,
                    std::span<const double> a2, std::span<const double> b2);

int field_dim(Field field);

}  // namespace riesz

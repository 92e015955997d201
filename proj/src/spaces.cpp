#include "riesz/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

#include "riesz/quaternion.hpp"

namespace riesz {

namespace {

double clamp_unit(double v) { return std::min(1.0, std::max(-1.0, v)); }

int family_field_dim(Family f) {
  switch (f) {
    case Family::Sphere:
    case Family::RealProj: return 1;
    case Family::ComplexProj: return 2;
    case Family::QuatProj: return 4;
    case Family::OctoProj: return 8;
  }
  return 1;
}

const char* family_tag(Family f) {
  switch (f) {
    case Family::Sphere: return "S";
    case Family::RealProj: return "RP";
    case Family::ComplexProj: return "CP";
    case Family::QuatProj: return "HP";
    case Family::OctoProj: return "OP";
  }
  return "?";
}

}  // namespace

int field_dim(Field field) {
  switch (field) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quat: return 4;
  }
  return 1;
}

Space::Space(Family family, int d) : family_(family), d_(d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "space dimension must be >= 1");
  if (family == Family::OctoProj && d > 2)
    fail(ErrorCode::InvalidArgument, "OP:<d> requires d in {1,2}");
}

Space Space::parse(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorCode::InvalidArgument, "space spec must look like RP:2, got '" + std::string(spec) + "'");
  std::string tag(spec.substr(0, colon));
  int d = 0;
  try {
    std::size_t used = 0;
    std::string num(spec.substr(colon + 1));
    d = std::stoi(num, &used);
    if (used != num.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "bad dimension in space spec '" + std::string(spec) + "'");
  }
  if (tag == "S") return Space(Family::Sphere, d);
  if (tag == "RP") return Space(Family::RealProj, d);
  if (tag == "CP") return Space(Family::ComplexProj, d);
  if (tag == "HP") return Space(Family::QuatProj, d);
  if (tag == "OP") return Space(Family::OctoProj, d);
  fail(ErrorCode::InvalidArgument, "unknown space family '" + tag + "'");
}

std::string Space::spec() const {
  return std::string(family_tag(family_)) + ":" + std::to_string(d_);
}

double Space::alpha() const {
  if (family_ == Family::Sphere) return d_ / 2.0 - 1.0;
  return d_ * family_field_dim(family_) / 2.0 - 1.0;
}

double Space::beta() const {
  if (family_ == Family::Sphere) return alpha();
  return family_field_dim(family_) / 2.0 - 1.0;
}

int Space::dim() const { return family_ == Family::Sphere ? d_ : d_ * family_field_dim(family_); }

Field Space::field() const {
  switch (family_) {
    case Family::Sphere:
    case Family::RealProj: return Field::Real;
    case Family::ComplexProj: return Field::Complex;
    case Family::QuatProj: return Field::Quat;
    case Family::OctoProj:
      fail(ErrorCode::Unsupported, "point-level operations are not supported on OP spaces");
  }
  return Field::Real;
}

int Space::field_dim() const { return riesz::field_dim(field()); }

int Space::ambient_real_dim() const { return (d_ + 1) * field_dim(); }

namespace {

// Right-multiplies every coordinate of x by the unit scalar that makes the
// first coordinate of nonnegligible modulus real and positive.
void canonicalize(const Space& space, std::vector<double>& c) {
  if (!space.projective()) return;
  int fd = space.field_dim();
  int n = space.d() + 1;
  int pivot = -1;
  for (int k = 0; k < n; ++k) {
    double m2 = 0;
    for (int j = 0; j < fd; ++j) m2 += c[k * fd + j] * c[k * fd + j];
    if (m2 > 1e-18) { pivot = k; break; }
  }
  if (pivot < 0) return;
  if (fd == 1) {
    if (c[pivot] < 0)
      for (auto& v : c) v = -v;
    return;
  }
  if (fd == 2) {
    std::complex<double> z(c[2 * pivot], c[2 * pivot + 1]);
    std::complex<double> u = std::conj(z) / std::abs(z);
    for (int k = 0; k < n; ++k) {
      std::complex<double> w(c[2 * k], c[2 * k + 1]);
      w *= u;
      c[2 * k] = w.real();
      c[2 * k + 1] = w.imag();
    }
    return;
  }
  Quaternion z(c[4 * pivot], c[4 * pivot + 1], c[4 * pivot + 2], c[4 * pivot + 3]);
  Quaternion u = z.conj() * (1.0 / z.norm());
  for (int k = 0; k < n; ++k) {
    Quaternion w(c[4 * k], c[4 * k + 1], c[4 * k + 2], c[4 * k + 3]);
    w = w * u;  // right action keeps equivalence classes intact
    c[4 * k] = w.w;
    c[4 * k + 1] = w.x;
    c[4 * k + 2] = w.y;
    c[4 * k + 3] = w.z;
  }
}

}  // namespace

Point::Point(const Space& space, std::vector<double> coords) : space_(space), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != space_.ambient_real_dim())
    fail(ErrorCode::InvalidArgument, "point has wrong coordinate count for " + space_.spec());
  double n2 = 0;
  for (double v : coords_) n2 += v * v;
  double n = std::sqrt(n2);
  if (!(std::abs(n - 1.0) <= 1e-9))
    fail(ErrorCode::InvalidArgument, "point coordinates must form a unit vector");
  for (auto& v : coords_) v /= n;
  canonicalize(space_, coords_);
}

Point Point::random(const Space& space, Rng& rng) {
  int m = space.ambient_real_dim();  // throws for OP via field()
  space.field();
  std::vector<double> c(m);
  double n2 = 0;
  do {
    n2 = 0;
    for (auto& v : c) {
      v = rng.gaussian();
      n2 += v * v;
    }
  } while (n2 < 1e-24);
  double inv = 1.0 / std::sqrt(n2);
  for (auto& v : c) v *= inv;
  return Point(space, std::move(c));
}

double inner_modulus(const Space& space, const Point& x, const Point& y) {
  if (!(x.space() == space) || !(y.space() == space))
    fail(ErrorCode::InvalidArgument, "point does not belong to " + space.spec());
  const auto& a = x.coords();
  const auto& b = y.coords();
  int fd = space.field_dim();
  int n = space.d() + 1;
  if (fd == 1) {
    double s = 0;
    for (int k = 0; k < n; ++k) s += a[k] * b[k];
    return std::abs(s);
  }
  if (fd == 2) {
    std::complex<double> s = 0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> za(a[2 * k], a[2 * k + 1]);
      std::complex<double> zb(b[2 * k], b[2 * k + 1]);
      s += std::conj(za) * zb;
    }
    return std::abs(s);
  }
  Quaternion s;
  for (int k = 0; k < n; ++k) {
    Quaternion qa(a[4 * k], a[4 * k + 1], a[4 * k + 2], a[4 * k + 3]);
    Quaternion qb(b[4 * k], b[4 * k + 1], b[4 * k + 2], b[4 * k + 3]);
    s = s + qa.conj() * qb;
  }
  return s.norm();
}

double geodesic_distance(const Space& space, const Point& x, const Point& y) {
  if (!space.projective()) {
    double dot = 0;
    for (std::size_t k = 0; k < x.coords().size(); ++k) dot += x.coords()[k] * y.coords()[k];
    return std::acos(clamp_unit(dot));
  }
  double m = inner_modulus(space, x, y);
  return std::acos(clamp_unit(2.0 * m * m - 1.0));
}

double chordal_distance(const Space& space, const Point& x, const Point& y) {
  double theta = geodesic_distance(space, x, y);
  double rho = std::sin(theta / 2.0);
  return space.projective() ? rho : 2.0 * rho;
}

namespace {

double span_norm2(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

// b * a^{-1} in the field, as flat reals.
std::vector<double> field_right_div(Field field, std::span<const double> b, std::span<const double> a) {
  if (field == Field::Real) return {b[0] / a[0]};
  if (field == Field::Complex) {
    std::complex<double> zb(b[0], b[1]), za(a[0], a[1]);
    auto r = zb / za;
    return {r.real(), r.imag()};
  }
  Quaternion qb(b[0], b[1], b[2], b[3]), qa(a[0], a[1], a[2], a[3]);
  Quaternion r = qb * qa.inverse();
  return {r.w, r.x, r.y, r.z};
}

}  // namespace

Point isometry_tau(Field field, std::span<const double> a, std::span<const double> b) {
  int fd = field_dim(field);
  if (static_cast<int>(a.size()) != fd || static_cast<int>(b.size()) != fd)
    fail(ErrorCode::InvalidArgument, "representative components have wrong size for the field");
  double na2 = span_norm2(a), nb2 = span_norm2(b);
  if (na2 + nb2 < 1e-24) fail(ErrorCode::Domain, "zero vector does not represent a point of FP^1");
  int D = fd;  // dim of FP^1 as a real manifold
  Space sphere(Family::Sphere, D);
  std::vector<double> out(D + 1, 0.0);
  if (na2 < 1e-28 * nb2) {
    out[0] = -1.0;
    return Point(sphere, std::move(out));
  }
  // normalize the representative pair, then reduce to [(1, x)]
  double inv = 1.0 / std::sqrt(na2 + nb2);
  std::vector<double> an(a.begin(), a.end()), bn(b.begin(), b.end());
  for (auto& v : an) v *= inv;
  for (auto& v : bn) v *= inv;
  std::vector<double> x = field_right_div(field, bn, an);
  double m2 = span_norm2(x);
  double denom = 1.0 + m2;
  out[0] = (1.0 - m2) / denom;
  for (int j = 0; j < D; ++j) out[1 + j] = 2.0 * x[j] / denom;
  return Point(sphere, std::move(out));
}

double fp1_geodesic(Field field, std::span<const double> a1, std::span<const double> b1,
                    std::span<const double> a2, std::span<const double> b2) {
  int fd = field_dim(field);
  // |<p, q>| for p = (a1,b1), q = (a2,b2), both normalized here
  double n1 = std::sqrt(span_norm2(a1) + span_norm2(b1));
  double n2 = std::sqrt(span_norm2(a2) + span_norm2(b2));
  if (n1 < 1e-12 || n2 < 1e-12) fail(ErrorCode::Domain, "zero representative on FP^1");
  double m;
  if (fd == 1) {
    m = std::abs(a1[0] * a2[0] + b1[0] * b2[0]);
  } else if (fd == 2) {
    std::complex<double> za1(a1[0], a1[1]), zb1(b1[0], b1[1]);
    std::complex<double> za2(a2[0], a2[1]), zb2(b2[0], b2[1]);
    m = std::abs(std::conj(za1) * za2 + std::conj(zb1) * zb2);
  } else {
    Quaternion qa1(a1[0], a1[1], a1[2], a1[3]), qb1(b1[0], b1[1], b1[2], b1[3]);
    Quaternion qa2(a2[0], a2[1], a2[2], a2[3]), qb2(b2[0], b2[1], b2[2], b2[3]);
    m = (qa1.conj() * qa2 + qb1.conj() * qb2).norm();
  }
  m /= n1 * n2;
  return std::acos(clamp_unit(2.0 * m * m - 1.0));
}

}  // namespace riesz

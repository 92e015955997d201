#pragma once

#include <cmath>

namespace riesz {

// Hamilton quaternion w + xi + yj + zk. Only what the projective inner
// products need: conjugation, the non-commutative product, and moduli.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  Quaternion operator+(const Quaternion& q) const { return {w + q.w, x + q.x, y + q.y, z + q.z}; }
  Quaternion operator-(const Quaternion& q) const { return {w - q.w, x - q.x, y - q.y, z - q.z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  Quaternion operator*(const Quaternion& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }

  Quaternion inverse() const {
    double n2 = norm2();
    return {w / n2, -x / n2, -y / n2, -z / n2};
  }
};

}  // namespace riesz

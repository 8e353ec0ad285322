#pragma once

#include <cmath>
#include <iosfwd>

namespace qzb {

/// Element of H stored as q = w + x i + y j + z k in double precision.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : w(real) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q *= (1.0 / s); }

/// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Inner product of the two quaternions viewed as vectors of R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr double norm_squared(const Quaternion& q) { return dot(q, q); }

/// |q|, computed with hypot-style scaling so tiny and huge inputs do not
/// underflow or overflow.
double modulus(const Quaternion& q);

/// |Im q|.
double imag_modulus(const Quaternion& q);

bool is_finite(const Quaternion& q);

/// Below this modulus inversion is refused.
inline constexpr double kInverseThreshold = 1e-300;

/// q^{-1} = conj(q) / |q|^2. Throws ErrorCode::ZeroDivision when |q| < 1e-300.
Quaternion inverse(const Quaternion& q);

/// Angle in [0, pi] between a and b seen as vectors of R^4.
/// Throws ErrorCode::ZeroDivision if either argument is zero.
double angle(const Quaternion& a, const Quaternion& b);

/// Unit imaginary I = Im(q)/|Im(q)|, so q = Re(q) + |Im(q)| I.
/// Throws ErrorCode::DegenerateReal when |Im q| < 1e-14 max(1, |q|); the
/// caller then picks any I on the unit sphere.
Quaternion imaginary_unit(const Quaternion& q);

/// Right-hand side (|q2| - |q1|) cos(theta) + (|q2| + |q1|) sin(theta) of the
/// chordal angle inequality. Requires angle(q1, q2) <= 2 theta, |q1| <= |q2|
/// and 0 <= theta <= pi/2; violations throw ErrorCode::HypothesisViolated.
/// A zero q1 or q2 is accepted (the angle condition is vacuous there).
double chord_bound(const Quaternion& q1, const Quaternion& q2, double theta);

/// Distance |a - b|.
inline double distance(const Quaternion& a, const Quaternion& b) { return modulus(a - b); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qzb

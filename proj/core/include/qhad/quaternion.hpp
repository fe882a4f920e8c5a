#pragma once

#include <cmath>
#include <iosfwd>

namespace qhad {

/// Default comparison tolerance used across the library.
inline constexpr double kDefaultTol = 1e-9;

/// Real quaternion w + x·i + y·j + z·k with Hamilton products (ij = k, ijk = -1).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  /// Pure part x·i + y·j + z·k.
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }
constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) { return q.norm2(); }
inline double abs(const Quaternion& q) { return q.abs(); }

/// Largest absolute component difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = kDefaultTol);

/// True when the j and k parts vanish within tol.
bool is_complex(const Quaternion& q, double tol = kDefaultTol);
bool is_real(const Quaternion& q, double tol = kDefaultTol);

/// Multiplicative inverse conj(q)/|q|^2. Throws std::domain_error for q == 0.
Quaternion inv(const Quaternion& q);

/// q^n by repeated multiplication; q^0 = 1.
Quaternion pow(const Quaternion& q, unsigned n);

/// u·q·u^-1 with u normalized first. Throws std::domain_error for u == 0.
Quaternion group_conj(const Quaternion& u, const Quaternion& q);

/// Brenner's criterion: equal real parts and equal imaginary-part norms.
bool conjugal(const Quaternion& q, const Quaternion& r, double tol = kDefaultTol);

/// Unit quaternion cos(angle/2) + axis·sin(angle/2); conjugating by it rotates
/// pure quaternions by `angle` about `axis` (right-hand rule). `axis` is the
/// pure part of the argument and is normalized internally.
Quaternion rotation(const Quaternion& axis, double angle);

/// Unit u with u·q·u^-1 = Re(q) + |Im(q)|·i.
Quaternion normalize_to_complex(const Quaternion& q);

/// Unit u such that u·q·u^-1 is complex with non-negative i part and
/// u·r·u^-1 has no k part.
Quaternion normalize_pair(const Quaternion& q, const Quaternion& r);

/// cos(theta) + axis·sin(theta) for a unit pure axis. Throws std::domain_error
/// if axis is not a square root of -1 within 1e-12.
Quaternion exp_axis(const Quaternion& axis, double theta);

/// Unit pure quaternion cos(theta)sin(phi)·i + sin(theta)sin(phi)·j + cos(phi)·k.
Quaternion sphere_axis(double theta, double phi);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qhad

#include "qhad/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qhad {

namespace {

// Imaginary vectors shorter than this are treated as zero when choosing
// rotation axes.
constexpr double kAxisEps = 1e-14;

struct Vec3 {
  double x, y, z;
};

Vec3 vec(const Quaternion& q) { return {q.x, q.y, q.z}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double length(const Vec3& a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }

}  // namespace

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y),
                   std::abs(p.z - q.z)});
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) {
  return max_abs_diff(p, q) <= tol;
}

bool is_complex(const Quaternion& q, double tol) {
  return std::abs(q.y) <= tol && std::abs(q.z) <= tol;
}

bool is_real(const Quaternion& q, double tol) {
  return std::abs(q.x) <= tol && is_complex(q, tol);
}

Quaternion inv(const Quaternion& q) {
  const double n2 = q.norm2();
  if (n2 == 0.0) {
    throw std::domain_error("inv: zero quaternion has no inverse");
  }
  return conj(q) / n2;
}

Quaternion pow(const Quaternion& q, unsigned n) {
  Quaternion result = Quaternion::one();
  for (unsigned k = 0; k < n; ++k) {
    result = result * q;
  }
  return result;
}

Quaternion group_conj(const Quaternion& u, const Quaternion& q) {
  const double n = u.abs();
  if (n == 0.0) {
    throw std::domain_error("group_conj: conjugator must be nonzero");
  }
  const Quaternion unit = u / n;
  return unit * q * conj(unit);
}

bool conjugal(const Quaternion& q, const Quaternion& r, double tol) {
  return std::abs(q.w - r.w) <= tol && std::abs(q.imag_norm() - r.imag_norm()) <= tol;
}

Quaternion rotation(const Quaternion& axis, double angle) {
  const double len = axis.imag_norm();
  if (len == 0.0) {
    return Quaternion::one();
  }
  const double s = std::sin(angle / 2.0) / len;
  return {std::cos(angle / 2.0), axis.x * s, axis.y * s, axis.z * s};
}

Quaternion normalize_to_complex(const Quaternion& q) {
  const double len = q.imag_norm();
  if (len <= kAxisEps) {
    return Quaternion::one();
  }
  const Vec3 v{q.x / len, q.y / len, q.z / len};
  // v × i
  const Vec3 axis = cross(v, {1.0, 0.0, 0.0});
  const double s = length(axis);
  if (s <= kAxisEps) {
    // Already on the i axis; antiparallel needs a half turn about j.
    return v.x > 0.0 ? Quaternion::one() : Quaternion::j();
  }
  const double angle = std::atan2(s, v.x);
  return rotation({0.0, axis.x, axis.y, axis.z}, angle);
}

Quaternion normalize_pair(const Quaternion& q, const Quaternion& r) {
  const Vec3 vq = vec(q);
  const Vec3 vr = vec(r);
  const double lq = length(vq);
  const double lr = length(vr);
  if (lq <= kAxisEps && lr <= kAxisEps) {
    return Quaternion::one();
  }
  if (lq <= kAxisEps) {
    return normalize_to_complex(r);
  }
  Vec3 n = cross(vq, vr);
  const double ln = length(n);
  if (lr <= kAxisEps || ln <= kAxisEps * lq * lr) {
    return normalize_to_complex(q);
  }
  n = {n.x / ln, n.y / ln, n.z / ln};
  if (n.z < 0.0) {
    n = {-n.x, -n.y, -n.z};
  }

  // First rotation takes the plane normal onto +k, i.e. the plane spanned by
  // Im(q), Im(r) onto the i-j plane. Its axis n × k lies on the equator.
  Quaternion u1 = Quaternion::one();
  Vec3 axis = cross(n, {0.0, 0.0, 1.0});
  const double la = length(axis);
  if (la > kAxisEps) {
    double angle = std::atan2(la, n.z);
    if (axis.x < 0.0 || (axis.x == 0.0 && axis.y < 0.0)) {
      axis = {-axis.x, -axis.y, -axis.z};
      angle = -angle;
    }
    u1 = rotation({0.0, axis.x, axis.y, axis.z}, angle);
  }

  // Second rotation about k puts Im(q) on the positive i axis.
  const Quaternion q1 = group_conj(u1, q);
  const Quaternion u2 = rotation(Quaternion::k(), -std::atan2(q1.y, q1.x));
  return u2 * u1;
}

Quaternion exp_axis(const Quaternion& axis, double theta) {
  if (std::abs(axis.w) > 1e-12 || std::abs(axis.abs() - 1.0) > 1e-12) {
    throw std::domain_error("exp_axis: axis must be a unit pure quaternion");
  }
  const double s = std::sin(theta);
  return {std::cos(theta), axis.x * s, axis.y * s, axis.z * s};
}

Quaternion sphere_axis(double theta, double phi) {
  return {0.0, std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi),
          std::cos(phi)};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace qhad

// Reference computations written independently of the library code paths.
#pragma once

#include <array>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "qhad/qmatrix.hpp"

namespace oracle {

using qhad::QMatrix;
using qhad::Quaternion;

// Left-multiplication matrix: vec(p q) = L(p) vec(q).
inline Eigen::Matrix4d left_matrix(const Quaternion& p) {
  Eigen::Matrix4d m;
  m << p.w, -p.x, -p.y, -p.z,
       p.x,  p.w, -p.z,  p.y,
       p.y,  p.z,  p.w, -p.x,
       p.z, -p.y,  p.x,  p.w;
  return m;
}

inline Eigen::Vector4d vec(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

inline Quaternion product(const Quaternion& p, const Quaternion& q) {
  const Eigen::Vector4d v = left_matrix(p) * vec(q);
  return {v(0), v(1), v(2), v(3)};
}

// Rodrigues' formula for a rotation of v about the unit axis n.
inline Eigen::Vector3d rodrigues(const Eigen::Vector3d& n, double angle, const Eigen::Vector3d& v) {
  return v * std::cos(angle) + n.cross(v) * std::sin(angle) + n * n.dot(v) * (1.0 - std::cos(angle));
}

inline double dist(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y), std::abs(p.z - q.z)});
}

// Max deviation of H from the Hadamard conditions, by direct loops over
// rows and columns using the oracle product.
inline double hadamard_defect(const QMatrix& h) {
  const std::size_t n = h.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(h(i, j).abs() - 1.0));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Quaternion row, col;
      for (std::size_t k = 0; k < n; ++k) {
        const Quaternion rc{h(b, k).w, -h(b, k).x, -h(b, k).y, -h(b, k).z};
        row += product(h(a, k), rc);
        const Quaternion cc{h(k, a).w, -h(k, a).x, -h(k, a).y, -h(k, a).z};
        col += product(cc, h(k, b));
      }
      const double target = a == b ? static_cast<double>(n) : 0.0;
      worst = std::max({worst, dist(row, Quaternion(target)), dist(col, Quaternion(target))});
    }
  }
  return worst;
}

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng), g(rng), g(rng)};
}

inline Quaternion random_unit(std::mt19937_64& rng) {
  Quaternion q = random_quaternion(rng);
  return q / q.abs();
}

inline QMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  QMatrix m(n);
  for (auto& q : m.entries()) q = random_quaternion(rng);
  return m;
}

// Random quaternionic unitary by Gram-Schmidt on rows; scaled by sqrt(n) it
// satisfies the Gram conditions but not unit entries.
inline QMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  QMatrix m = random_matrix(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      Quaternion c;  // <row_i, row_k> = sum_j m_ij conj(m_kj)
      for (std::size_t j = 0; j < n; ++j) {
        const Quaternion mk = m(k, j);
        c += product(m(i, j), Quaternion{mk.w, -mk.x, -mk.y, -mk.z});
      }
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= product(c, m(k, j));
    }
    double norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) norm += m(i, j).norm2();
    norm = std::sqrt(norm);
    for (std::size_t j = 0; j < n; ++j) m(i, j) /= norm;
  }
  return m;
}

}  // namespace oracle

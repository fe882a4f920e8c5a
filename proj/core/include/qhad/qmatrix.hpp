#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qhad/quaternion.hpp"

namespace qhad {

/// Square row-major matrix of quaternions, order >= 1.
class QMatrix {
 public:
  /// Zero matrix of the given order. Throws std::invalid_argument for order 0.
  explicit QMatrix(std::size_t order);
  QMatrix(std::size_t order, std::vector<Quaternion> entries);

  static QMatrix identity(std::size_t order);
  static QMatrix from_rows(const std::vector<std::vector<Quaternion>>& rows);

  std::size_t order() const { return order_; }

  Quaternion& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const Quaternion& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }

  std::span<const Quaternion> entries() const { return entries_; }
  std::span<Quaternion> entries() { return entries_; }

  /// Conjugate transpose H*.
  QMatrix adjoint() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator*=(double s);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<Quaternion> entries_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);

double max_abs_diff(const QMatrix& a, const QMatrix& b);

struct VerificationReport {
  double entry_norm_dev = 0.0;  ///< max | |h_ij| - 1 |
  double gram_row_dev = 0.0;    ///< max off-diagonal |(H H*)_ik|
  double gram_col_dev = 0.0;    ///< max off-diagonal |(H* H)_jl|
  double tolerance = kDefaultTol;
  bool pass = false;

  double max_dev() const;
};

/// Unit entries plus pairwise orthogonal rows and columns. The row product of
/// rows i, k is sum_j h_ij conj(h_kj); columns j, l use sum_i conj(h_ij) h_il.
VerificationReport hadamard_check(const QMatrix& h, double tol = kDefaultTol);

// Equivalence moves. Permutations are 0-based: result row i is input row
// sigma[i] (resp. column).
struct RowPermutation {
  std::vector<std::size_t> sigma;
};
struct ColumnPermutation {
  std::vector<std::size_t> sigma;
};
/// Row i is multiplied on the left by d[i].
struct LeftDiagonal {
  std::vector<Quaternion> d;
};
/// Column j is multiplied on the right by d[j].
struct RightDiagonal {
  std::vector<Quaternion> d;
};
/// Every entry h becomes u h u^-1.
struct GlobalConjugation {
  Quaternion u;
};

using EquivalenceMove =
    std::variant<RowPermutation, ColumnPermutation, LeftDiagonal, RightDiagonal, GlobalConjugation>;

/// Throws std::invalid_argument on dimension mismatch, a non-bijective
/// permutation, or a diagonal/conjugator entry whose norm differs from 1 by
/// more than 1e-9.
QMatrix apply_move(const QMatrix& h, const EquivalenceMove& move);
QMatrix apply_moves(QMatrix h, std::span<const EquivalenceMove> moves);

/// The move undoing `move`.
EquivalenceMove inverse(const EquivalenceMove& move);

struct Dephased {
  QMatrix matrix;
  LeftDiagonal left;
  RightDiagonal right;
};

/// Rows are first multiplied on the left by the inverse of their leading
/// entry, then columns on the right by the inverse of the updated first-row
/// entry. The original is recovered by applying inverse(right) then
/// inverse(left). Throws std::domain_error on a zero first-row/column entry.
Dephased dephase(const QMatrix& h);

bool is_dephased(const QMatrix& h, double tol = kDefaultTol);

/// Bordered matrix of order row.size() + 1 whose core row k is the right
/// cyclic shift of `row` by k. Throws std::invalid_argument for an empty row.
QMatrix circulant_from_row(std::span<const Quaternion> row);

/// First row of the core (entries (1,1)..(1,n-1)). Empty for order 1.
std::vector<Quaternion> core_row(const QMatrix& h);

/// Core entries satisfy core[i][j] = core[i-1][j-1] cyclically.
bool is_circulant_core(const QMatrix& h, double tol = kDefaultTol);

/// All entries pairwise commute, i.e. all imaginary parts are parallel, which
/// is exactly when one global conjugation makes every entry complex.
bool commuting_core_test(const QMatrix& h, double tol = kDefaultTol);

bool is_complex_matrix(const QMatrix& h, double tol = kDefaultTol);

}  // namespace qhad

#include "qhad/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace qhad {

namespace {

constexpr double kUnitTol = 1e-9;

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " entries, got " + std::to_string(got));
  }
}

void require_unit(const Quaternion& q, const char* what) {
  if (std::abs(q.abs() - 1.0) > kUnitTol) {
    throw std::invalid_argument(std::string(what) + ": entry is not a unit quaternion");
  }
}

void require_bijection(const std::vector<std::size_t>& sigma, std::size_t n, const char* what) {
  require_size(sigma.size(), n, what);
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) {
      throw std::invalid_argument(std::string(what) + ": not a permutation");
    }
    seen[s] = true;
  }
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    out[sigma[i]] = i;
  }
  return out;
}

std::vector<Quaternion> inverted(const std::vector<Quaternion>& d) {
  std::vector<Quaternion> out;
  out.reserve(d.size());
  for (const auto& q : d) {
    out.push_back(inv(q));
  }
  return out;
}

}  // namespace

QMatrix::QMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) {
    throw std::invalid_argument("QMatrix: order must be at least 1");
  }
}

QMatrix::QMatrix(std::size_t order, std::vector<Quaternion> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order == 0) {
    throw std::invalid_argument("QMatrix: order must be at least 1");
  }
  require_size(entries_.size(), order * order, "QMatrix");
}

QMatrix QMatrix::identity(std::size_t order) {
  QMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) {
    m(i, i) = Quaternion::one();
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Quaternion>>& rows) {
  QMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_size(rows[i].size(), rows.size(), "QMatrix::from_rows");
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * rows.size());
  }
  return m;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      out(j, i) = conj((*this)(i, j));
    }
  }
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
  if (other.order_ != order_) {
    throw std::invalid_argument("QMatrix: order mismatch in addition");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : entries_) {
    q *= s;
  }
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("QMatrix: order mismatch in product");
  }
  const std::size_t n = a.order();
  QMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Quaternion acc;
      for (std::size_t k = 0; k < n; ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("max_abs_diff: order mismatch");
  }
  double dev = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    dev = std::max(dev, max_abs_diff(a.entries()[k], b.entries()[k]));
  }
  return dev;
}

double VerificationReport::max_dev() const {
  return std::max({entry_norm_dev, gram_row_dev, gram_col_dev});
}

VerificationReport hadamard_check(const QMatrix& h, double tol) {
  const std::size_t n = h.order();
  VerificationReport report;
  report.tolerance = tol;
  for (const auto& q : h.entries()) {
    report.entry_norm_dev = std::max(report.entry_norm_dev, std::abs(q.abs() - 1.0));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      Quaternion rows;
      Quaternion cols;
      for (std::size_t j = 0; j < n; ++j) {
        rows += h(i, j) * conj(h(k, j));
        cols += conj(h(j, i)) * h(j, k);
      }
      // (H H*)_ki and (H* H)_ki are the conjugates of these; same modulus.
      report.gram_row_dev = std::max(report.gram_row_dev, rows.abs());
      report.gram_col_dev = std::max(report.gram_col_dev, cols.abs());
    }
  }
  report.pass = report.entry_norm_dev <= tol && report.gram_row_dev <= tol &&
                report.gram_col_dev <= tol;
  return report;
}

QMatrix apply_move(const QMatrix& h, const EquivalenceMove& move) {
  const std::size_t n = h.order();
  return std::visit(
      [&](const auto& m) -> QMatrix {
        using T = std::decay_t<decltype(m)>;
        QMatrix out(n);
        if constexpr (std::is_same_v<T, RowPermutation>) {
          require_bijection(m.sigma, n, "row permutation");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              out(i, j) = h(m.sigma[i], j);
            }
          }
        } else if constexpr (std::is_same_v<T, ColumnPermutation>) {
          require_bijection(m.sigma, n, "column permutation");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              out(i, j) = h(i, m.sigma[j]);
            }
          }
        } else if constexpr (std::is_same_v<T, LeftDiagonal>) {
          require_size(m.d.size(), n, "left diagonal");
          for (const auto& q : m.d) require_unit(q, "left diagonal");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              out(i, j) = m.d[i] * h(i, j);
            }
          }
        } else if constexpr (std::is_same_v<T, RightDiagonal>) {
          require_size(m.d.size(), n, "right diagonal");
          for (const auto& q : m.d) require_unit(q, "right diagonal");
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              out(i, j) = h(i, j) * m.d[j];
            }
          }
        } else {
          require_unit(m.u, "global conjugation");
          const Quaternion u_inv = inv(m.u);
          for (std::size_t k = 0; k < n * n; ++k) {
            out.entries()[k] = m.u * h.entries()[k] * u_inv;
          }
        }
        return out;
      },
      move);
}

QMatrix apply_moves(QMatrix h, std::span<const EquivalenceMove> moves) {
  for (const auto& m : moves) {
    h = apply_move(h, m);
  }
  return h;
}

EquivalenceMove inverse(const EquivalenceMove& move) {
  return std::visit(
      [](const auto& m) -> EquivalenceMove {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RowPermutation>) {
          return RowPermutation{invert(m.sigma)};
        } else if constexpr (std::is_same_v<T, ColumnPermutation>) {
          return ColumnPermutation{invert(m.sigma)};
        } else if constexpr (std::is_same_v<T, LeftDiagonal>) {
          return LeftDiagonal{inverted(m.d)};
        } else if constexpr (std::is_same_v<T, RightDiagonal>) {
          return RightDiagonal{inverted(m.d)};
        } else {
          return GlobalConjugation{inv(m.u)};
        }
      },
      move);
}

Dephased dephase(const QMatrix& h) {
  const std::size_t n = h.order();
  LeftDiagonal left;
  left.d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion lead = h(i, 0);
    if (lead.norm2() == 0.0) {
      throw std::domain_error("dephase: zero entry in first column");
    }
    left.d.push_back(inv(lead));
  }
  QMatrix rows_fixed(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows_fixed(i, j) = left.d[i] * h(i, j);
    }
  }
  RightDiagonal right;
  right.d.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Quaternion top = rows_fixed(0, j);
    if (top.norm2() == 0.0) {
      throw std::domain_error("dephase: zero entry in first row");
    }
    right.d.push_back(inv(top));
  }
  QMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = rows_fixed(i, j) * right.d[j];
    }
  }
  return {std::move(out), std::move(left), std::move(right)};
}

bool is_dephased(const QMatrix& h, double tol) {
  for (std::size_t k = 0; k < h.order(); ++k) {
    if (!approx_equal(h(0, k), Quaternion::one(), tol) ||
        !approx_equal(h(k, 0), Quaternion::one(), tol)) {
      return false;
    }
  }
  return true;
}

QMatrix circulant_from_row(std::span<const Quaternion> row) {
  if (row.empty()) {
    throw std::invalid_argument("circulant_from_row: core row must be non-empty");
  }
  const std::size_t m = row.size();
  QMatrix out(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    out(0, k) = Quaternion::one();
    out(k, 0) = Quaternion::one();
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      out(k + 1, j + 1) = row[(j + m - k) % m];
    }
  }
  return out;
}

std::vector<Quaternion> core_row(const QMatrix& h) {
  std::vector<Quaternion> row;
  for (std::size_t j = 1; j < h.order(); ++j) {
    row.push_back(h(1, j));
  }
  return row;
}

bool is_circulant_core(const QMatrix& h, double tol) {
  const std::size_t n = h.order();
  if (n <= 2) {
    return true;
  }
  const std::size_t m = n - 1;
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t pj = (j + m - 1) % m;
      if (!approx_equal(h(i + 1, j + 1), h(i, pj + 1), tol)) {
        return false;
      }
    }
  }
  return true;
}

bool commuting_core_test(const QMatrix& h, double tol) {
  const auto e = h.entries();
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if ((e[a] * e[b] - e[b] * e[a]).abs() > tol) {
        return false;
      }
    }
  }
  return true;
}

bool is_complex_matrix(const QMatrix& h, double tol) {
  return std::all_of(h.entries().begin(), h.entries().end(),
                     [tol](const Quaternion& q) { return is_complex(q, tol); });
}

}  // namespace qhad

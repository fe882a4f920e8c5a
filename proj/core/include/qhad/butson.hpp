#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhad/qmatrix.hpp"

namespace qhad {

/// q^r = 1 within tol, by repeated multiplication. Throws
/// std::invalid_argument for r < 1.
bool is_root_of_unity(const Quaternion& q, int r, double tol = kDefaultTol);

/// Smallest r in [1, r_max] with q^r = 1 within tol.
std::optional<int> root_order(const Quaternion& q, int r_max, double tol = kDefaultTol);

/// Shared unit pure axis q with every entry in span{1, q}. Imaginary parts are
/// sign-aligned to the first non-real entry and averaged; any entry deviating
/// from the mean direction by more than 1e-6 rad rejects. An all-real matrix
/// returns i.
std::optional<Quaternion> common_axis(const QMatrix& h, double tol = kDefaultTol);

struct ButsonProfile {
  std::optional<int> minimal_r;       ///< all entries are r-th roots, r <= r_max
  std::optional<Quaternion> q_axis;   ///< common axis, if any
  std::size_t order = 0;
  std::vector<std::optional<int>> per_entry_order;  ///< row-major
};

/// Throws std::invalid_argument for r_max < 1.
ButsonProfile butson_profile(const QMatrix& h, int r_max = 24, double tol = kDefaultTol);

/// Unit u making u H u^-1 complex when the entries share an axis; u = 1 when H
/// is already complex.
std::optional<Quaternion> q_type_conjugate_to_complex(const QMatrix& h, double tol = kDefaultTol);

struct RowEnumeration {
  int r = 0;
  int order = 0;
  std::size_t candidates = 0;
  std::size_t valid = 0;
  std::vector<std::vector<int>> valid_exponents;  ///< exponents s of e^{2 pi i s / r}
};

/// Enumerates every dephased row (1, w^{s_1}, ..., w^{s_{n-1}}) of complex
/// r-th roots of unity and counts those summing to zero, i.e. the rows that
/// can be orthogonal to the all-ones first row.
RowEnumeration enumerate_dephased_rows(int r, int order, double tol = kDefaultTol);

struct BH45Report {
  RowEnumeration enumeration;
  bool empty = false;
  std::string explanation;
};

/// Exhaustive check that no complex Hadamard matrix of order 5 has only fourth
/// roots of unity as entries.
BH45Report bh45_emptiness();

}  // namespace qhad

#include "qhad/butson.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qhad {

namespace {

constexpr double kMaxAxisAngle = 1e-6;

Quaternion unit_imag(const Quaternion& q) {
  const double len = q.imag_norm();
  return {0.0, q.x / len, q.y / len, q.z / len};
}

double dot3(const Quaternion& a, const Quaternion& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double angle_between(const Quaternion& a, const Quaternion& b) {
  const Quaternion c = a * b;  // pure inputs: vector part is a × b
  return std::atan2(c.imag_norm(), dot3(a, b));
}

}  // namespace

bool is_root_of_unity(const Quaternion& q, int r, double tol) {
  if (r < 1) {
    throw std::invalid_argument("is_root_of_unity: r must be at least 1");
  }
  return approx_equal(pow(q, static_cast<unsigned>(r)), Quaternion::one(), tol);
}

std::optional<int> root_order(const Quaternion& q, int r_max, double tol) {
  Quaternion acc = Quaternion::one();
  for (int r = 1; r <= r_max; ++r) {
    acc = acc * q;
    if (approx_equal(acc, Quaternion::one(), tol)) {
      return r;
    }
  }
  return std::nullopt;
}

std::optional<Quaternion> common_axis(const QMatrix& h, double tol) {
  std::optional<Quaternion> ref;
  Quaternion sum;
  std::vector<Quaternion> dirs;
  for (const auto& q : h.entries()) {
    if (q.imag_norm() <= tol) continue;
    Quaternion v = unit_imag(q);
    if (!ref) {
      ref = v;
    } else if (dot3(v, *ref) < 0.0) {
      v = -v;
    }
    dirs.push_back(v);
    sum += v;
  }
  if (!ref) {
    return Quaternion::i();
  }
  const Quaternion mean = unit_imag(sum);
  for (const auto& v : dirs) {
    if (angle_between(v, mean) > kMaxAxisAngle) {
      return std::nullopt;
    }
  }
  return mean;
}

ButsonProfile butson_profile(const QMatrix& h, int r_max, double tol) {
  if (r_max < 1) {
    throw std::invalid_argument("butson_profile: r_max must be at least 1");
  }
  ButsonProfile profile;
  profile.order = h.order();
  profile.per_entry_order.reserve(h.entries().size());
  for (const auto& q : h.entries()) {
    profile.per_entry_order.push_back(root_order(q, r_max, tol));
  }
  for (int r = 1; r <= r_max && !profile.minimal_r; ++r) {
    bool all = true;
    for (const auto& q : h.entries()) {
      if (!is_root_of_unity(q, r, tol)) {
        all = false;
        break;
      }
    }
    if (all) profile.minimal_r = r;
  }
  profile.q_axis = common_axis(h, tol);
  return profile;
}

std::optional<Quaternion> q_type_conjugate_to_complex(const QMatrix& h, double tol) {
  const auto axis = common_axis(h, tol);
  if (!axis) {
    return std::nullopt;
  }
  if (is_complex_matrix(h, tol)) {
    return Quaternion::one();
  }
  return normalize_to_complex(*axis);
}

RowEnumeration enumerate_dephased_rows(int r, int order, double tol) {
  if (r < 1 || order < 1) {
    throw std::invalid_argument("enumerate_dephased_rows: r and order must be positive");
  }
  RowEnumeration out;
  out.r = r;
  out.order = order;
  const int free = order - 1;
  std::vector<std::complex<double>> roots;
  for (int s = 0; s < r; ++s) {
    roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * s / r));
  }
  std::vector<int> exps(static_cast<std::size_t>(free), 0);
  while (true) {
    std::complex<double> sum = 1.0;
    for (int s : exps) sum += roots[static_cast<std::size_t>(s)];
    ++out.candidates;
    if (std::abs(sum) <= tol) {
      ++out.valid;
      out.valid_exponents.push_back(exps);
    }
    // odometer increment
    int pos = 0;
    while (pos < free && ++exps[static_cast<std::size_t>(pos)] == r) {
      exps[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == free) break;
  }
  return out;
}

BH45Report bh45_emptiness() {
  BH45Report report;
  report.enumeration = enumerate_dephased_rows(4, 5);
  report.empty = report.enumeration.valid == 0;
  report.explanation =
      "A dephased row (1, a, b, c, d) with a, b, c, d in {1, i, -1, -i} must sum to zero. "
      "The imaginary part vanishes only if i and -i occur equally often, so an even number "
      "of the four entries are imaginary and an even number are real. Together with the "
      "leading 1 the real entries number an odd count of terms +-1, whose sum is odd and "
      "never zero. No row can be orthogonal to the all-ones row, hence BH(4,5) is empty.";
  return report;
}

}  // namespace qhad

#include "qhad/adjoint.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qhad {

namespace {

using cd = std::complex<double>;

// Sign pattern of the real adjoint: block (r, c) is sign * A_index.
struct Block {
  int index;
  double sign;
};
constexpr Block kRealPattern[4][4] = {
    {{0, 1}, {1, 1}, {2, -1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, -1}, {2, -1}},
    {{2, 1}, {3, -1}, {0, 1}, {1, 1}},
    {{3, 1}, {2, 1}, {1, 1}, {0, -1}},
};

double component(const Quaternion& q, int index) {
  switch (index) {
    case 0: return q.w;
    case 1: return q.x;
    case 2: return q.y;
    default: return q.z;
  }
}

template <typename Matrix>
void require_square(const Matrix& m, Eigen::Index multiple, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % multiple != 0) {
    throw std::invalid_argument(std::string(what) + ": expected a square matrix of order divisible by " +
                                std::to_string(multiple));
  }
}

}  // namespace

ComplexMatrix complex_adjoint(const QMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.order());
  ComplexMatrix out(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = a(i, j);
      const cd a0(q.w, q.x);
      const cd a1(q.y, q.z);
      out(i, j) = a0;
      out(i, j + n) = a1;
      out(i + n, j) = -std::conj(a1);
      out(i + n, j + n) = std::conj(a0);
    }
  }
  return out;
}

RealMatrix real_adjoint(const QMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.order());
  RealMatrix out(4 * n, 4 * n);
  for (int br = 0; br < 4; ++br) {
    for (int bc = 0; bc < 4; ++bc) {
      const Block b = kRealPattern[br][bc];
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          out(br * n + i, bc * n + j) = b.sign * component(a(i, j), b.index);
        }
      }
    }
  }
  return out;
}

bool is_complex_hadamard(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return false;
  }
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    if (std::abs(std::abs(m(k)) - 1.0) > tol) {
      return false;
    }
  }
  const ComplexMatrix gram = m * m.adjoint();
  const ComplexMatrix target =
      ComplexMatrix::Identity(m.rows(), m.cols()) * static_cast<double>(m.rows());
  return (gram - target).cwiseAbs().maxCoeff() <= tol;
}

bool is_real_hadamard(const RealMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return false;
  }
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    if (std::abs(std::abs(m(k)) - 1.0) > tol) {
      return false;
    }
  }
  const RealMatrix gram = m * m.transpose();
  const RealMatrix target =
      RealMatrix::Identity(m.rows(), m.cols()) * static_cast<double>(m.rows());
  return (gram - target).cwiseAbs().maxCoeff() <= tol;
}

bool compliance_check_complex(const ComplexMatrix& m, double tol) {
  require_square(m, 2, "compliance_check_complex");
  const Eigen::Index n = m.rows() / 2;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(m(i + n, j) + std::conj(m(i, j + n))) > tol ||
          std::abs(m(i + n, j + n) - std::conj(m(i, j))) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool compliance_check_real(const RealMatrix& m, double tol) {
  require_square(m, 4, "compliance_check_real");
  const Eigen::Index n = m.rows() / 4;
  // Components read from the first block row, which carries A0, A1, -A2, A3.
  auto comp = [&](int index, Eigen::Index i, Eigen::Index j) {
    const double v = m(i, index * n + j);
    return index == 2 ? -v : v;
  };
  for (int br = 1; br < 4; ++br) {
    for (int bc = 0; bc < 4; ++bc) {
      const Block b = kRealPattern[br][bc];
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          if (std::abs(m(br * n + i, bc * n + j) - b.sign * comp(b.index, i, j)) > tol) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

QMatrix lift_from_complex(const ComplexMatrix& m, double tol) {
  require_square(m, 2, "lift_from_complex");
  if (!is_complex_hadamard(m, tol)) {
    throw std::invalid_argument("lift_from_complex: input is not a complex Hadamard matrix");
  }
  if (!compliance_check_complex(m, tol)) {
    throw std::invalid_argument("lift_from_complex: input is not quaternionically compliant");
  }
  const Eigen::Index n = m.rows() / 2;
  QMatrix out(static_cast<std::size_t>(n));
  const double scale = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cd a0 = m(i, j);
      const cd a1 = m(i, j + n);
      out(i, j) = Quaternion(a0.real(), a0.imag(), a1.real(), a1.imag()) * scale;
    }
  }
  return out;
}

QMatrix lift_from_real(const RealMatrix& m, double tol) {
  require_square(m, 4, "lift_from_real");
  if (!is_real_hadamard(m, tol)) {
    throw std::invalid_argument("lift_from_real: input is not a real Hadamard matrix");
  }
  if (!compliance_check_real(m, tol)) {
    throw std::invalid_argument("lift_from_real: input is not quaternionically compliant");
  }
  const Eigen::Index n = m.rows() / 4;
  QMatrix out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = Quaternion(m(i, j), m(i, n + j), -m(i, 2 * n + j), m(i, 3 * n + j)) * 0.5;
    }
  }
  return out;
}

}  // namespace qhad

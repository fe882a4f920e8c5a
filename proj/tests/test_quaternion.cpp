#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "qhad/quaternion.hpp"

namespace {

using qhad::Quaternion;
using std::numbers::pi;

constexpr Quaternion I = Quaternion::i();
constexpr Quaternion J = Quaternion::j();
constexpr Quaternion K = Quaternion::k();

Eigen::Vector3d v3(const Quaternion& q) { return {q.x, q.y, q.z}; }

TEST(Quaternion, HamiltonTable) {
  EXPECT_EQ(I * J, K);
  EXPECT_EQ(J * K, I);
  EXPECT_EQ(K * I, J);
  EXPECT_EQ(J * I, -K);
  EXPECT_EQ(I * I, Quaternion(-1.0));
  EXPECT_EQ(I * J * K, Quaternion(-1.0));
}

TEST(Quaternion, ProductMatchesLeftMatrixOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = oracle::random_quaternion(rng);
    const Quaternion q = oracle::random_quaternion(rng);
    EXPECT_LE(oracle::dist(p * q, oracle::product(p, q)), 1e-14);
  }
}

TEST(Quaternion, NormIsMultiplicativeAndConjReverses) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = oracle::random_quaternion(rng);
    const Quaternion q = oracle::random_quaternion(rng);
    EXPECT_NEAR((p * q).abs(), p.abs() * q.abs(), 1e-12);
    EXPECT_LE(qhad::max_abs_diff(qhad::conj(p * q), qhad::conj(q) * qhad::conj(p)), 1e-13);
    EXPECT_LE(qhad::max_abs_diff(p * qhad::inv(p), Quaternion::one()), 1e-12);
  }
}

TEST(Quaternion, InverseOfZeroThrows) { EXPECT_THROW(qhad::inv(Quaternion()), std::domain_error); }

TEST(Quaternion, PowMatchesRepeatedProduct) {
  const Quaternion q(0.3, -0.2, 0.5, 0.1);
  Quaternion acc = Quaternion::one();
  for (unsigned n = 0; n < 8; ++n) {
    EXPECT_LE(qhad::max_abs_diff(qhad::pow(q, n), acc), 1e-14);
    acc = acc * q;
  }
}

TEST(Quaternion, RotationAgreesWithRodrigues) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int t = 0; t < 200; ++t) {
    Quaternion axis = oracle::random_quaternion(rng).imag();
    const Quaternion v = oracle::random_quaternion(rng).imag();
    const double a = angle(rng);
    const Quaternion u = qhad::rotation(axis, a);
    const Eigen::Vector3d expect = oracle::rodrigues(v3(axis).normalized(), a, v3(v));
    EXPECT_LE((v3(qhad::group_conj(u, v)) - expect).norm(), 1e-12);
  }
}

TEST(Quaternion, GroupConjPreservesRealPartAndImagNorm) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = oracle::random_quaternion(rng);
    const Quaternion u = oracle::random_quaternion(rng, 3.0);  // need not be unit
    const Quaternion r = qhad::group_conj(u, q);
    EXPECT_TRUE(qhad::conjugal(q, r, 1e-12));
  }
  EXPECT_THROW(qhad::group_conj(Quaternion(), I), std::domain_error);
}

TEST(Quaternion, ConjugalIsBrennerCriterion) {
  EXPECT_TRUE(qhad::conjugal(Quaternion(0.5, 1.0, 0.0, 0.0), Quaternion(0.5, 0.0, 0.6, 0.8)));
  EXPECT_FALSE(qhad::conjugal(Quaternion(0.5, 1.0, 0.0, 0.0), Quaternion(-0.5, 1.0, 0.0, 0.0)));
  EXPECT_FALSE(qhad::conjugal(I, 2.0 * J));
}

TEST(Quaternion, NormalizeToComplex) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Quaternion q = oracle::random_quaternion(rng);
    const Quaternion r = qhad::group_conj(qhad::normalize_to_complex(q), q);
    EXPECT_NEAR(r.w, q.w, 1e-12);
    EXPECT_NEAR(r.x, q.imag_norm(), 1e-12);
    EXPECT_NEAR(r.y, 0.0, 1e-12);
    EXPECT_NEAR(r.z, 0.0, 1e-12);
  }
}

TEST(Quaternion, NormalizeToComplexEdgeCases) {
  EXPECT_EQ(qhad::normalize_to_complex(Quaternion(2.0)), Quaternion::one());
  EXPECT_EQ(qhad::normalize_to_complex(Quaternion(1.0, 3.0)), Quaternion::one());
  const Quaternion anti(0.2, -1.0, 0.0, 0.0);
  const Quaternion r = qhad::group_conj(qhad::normalize_to_complex(anti), anti);
  EXPECT_LE(qhad::max_abs_diff(r, Quaternion(0.2, 1.0)), 1e-15);
}

TEST(Quaternion, NormalizePairPostconditions) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Quaternion q = oracle::random_quaternion(rng);
    const Quaternion r = oracle::random_quaternion(rng);
    const Quaternion u = qhad::normalize_pair(q, r);
    EXPECT_NEAR(u.abs(), 1.0, 1e-12);
    const Quaternion q2 = qhad::group_conj(u, q);
    const Quaternion r2 = qhad::group_conj(u, r);
    EXPECT_NEAR(q2.y, 0.0, 1e-10);
    EXPECT_NEAR(q2.z, 0.0, 1e-10);
    EXPECT_GE(q2.x, -1e-10);
    EXPECT_NEAR(r2.z, 0.0, 1e-10);
  }
}

TEST(Quaternion, NormalizePairDegenerateInputs) {
  // Parallel imaginary parts: the pair collapses onto a single axis.
  const Quaternion q(0.1, 0.0, 0.3, 0.4);
  const Quaternion r(0.2, 0.0, -0.6, -0.8);
  const Quaternion u = qhad::normalize_pair(q, r);
  EXPECT_TRUE(qhad::is_complex(qhad::group_conj(u, q), 1e-12));
  EXPECT_TRUE(qhad::is_complex(qhad::group_conj(u, r), 1e-12));
  EXPECT_EQ(qhad::normalize_pair(Quaternion(1.0), Quaternion(2.0)), Quaternion::one());
  const Quaternion only_r = qhad::normalize_pair(Quaternion(1.0), J);
  EXPECT_TRUE(qhad::is_complex(qhad::group_conj(only_r, J), 1e-12));
}

TEST(Quaternion, ExpAxisAndSphereAxis) {
  const Quaternion axis = qhad::sphere_axis(0.7, 1.1);
  EXPECT_NEAR(axis.abs(), 1.0, 1e-15);
  EXPECT_LE(qhad::max_abs_diff(axis * axis, Quaternion(-1.0)), 1e-15);
  const Quaternion e = qhad::exp_axis(axis, 2.0 * pi / 5.0);
  EXPECT_LE(qhad::max_abs_diff(qhad::pow(e, 5), Quaternion::one()), 1e-14);
  EXPECT_THROW(qhad::exp_axis(Quaternion(0.0, 2.0), 1.0), std::domain_error);
  EXPECT_THROW(qhad::exp_axis(Quaternion(0.1, 1.0), 1.0), std::domain_error);
  EXPECT_LE(qhad::max_abs_diff(qhad::sphere_axis(0.0, pi / 2), I), 1e-15);
}

TEST(Quaternion, Predicates) {
  EXPECT_TRUE(qhad::is_complex(Quaternion(1.0, 2.0)));
  EXPECT_FALSE(qhad::is_complex(Quaternion(1.0, 2.0, 1e-6)));
  EXPECT_TRUE(qhad::is_real(Quaternion(-3.0)));
  EXPECT_FALSE(qhad::is_real(I));
  EXPECT_TRUE(qhad::approx_equal(Quaternion(1.0), Quaternion(1.0 + 1e-12)));
}

TEST(Quaternion, StreamsAllComponents) {
  std::ostringstream os;
  os << Quaternion(1.0, -2.0, 0.5, 3.0);
  const std::string s = os.str();
  for (const char* piece : {"1", "-2", "0.5", "3"}) EXPECT_NE(s.find(piece), std::string::npos) << s;
}

}  // namespace

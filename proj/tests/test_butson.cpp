#include <gtest/gtest.h>

#include <chrono>
#include <numbers>

#include "oracles.hpp"
#include "qhad/butson.hpp"
#include "qhad/families.hpp"

namespace {

using qhad::QMatrix;
using qhad::Quaternion;
using std::numbers::pi;

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

TEST(Butson, RootsOfUnity) {
  EXPECT_TRUE(qhad::is_root_of_unity(J, 4));
  EXPECT_FALSE(qhad::is_root_of_unity(J, 2));
  EXPECT_EQ(qhad::root_order(Quaternion(-1.0), 10), 2);
  EXPECT_EQ(qhad::root_order(qhad::exp_axis(K, 2 * pi / 7), 24), 7);
  EXPECT_FALSE(qhad::root_order(Quaternion(0.6, 0.8), 24));
  EXPECT_THROW(qhad::is_root_of_unity(I, 0), std::invalid_argument);
}

TEST(Butson, QTypeObstruction) {
  const auto p = qhad::butson_profile(QMatrix::from_rows({{1.0, I}, {J, K}}));
  EXPECT_EQ(p.minimal_r, 4);
  EXPECT_FALSE(p.q_axis);
  ASSERT_EQ(p.per_entry_order.size(), 4u);
  EXPECT_EQ(p.per_entry_order[0], 1);
  EXPECT_EQ(p.per_entry_order[3], 4);
}

TEST(Butson, FourierIsQType) {
  const QMatrix h = qhad::fourier_quat(6, 0.8, 2.0);
  const auto p = qhad::butson_profile(h);
  EXPECT_EQ(p.minimal_r, 6);
  ASSERT_TRUE(p.q_axis);
  const Quaternion axis = qhad::sphere_axis(0.8, 2.0);
  EXPECT_LE(std::min(qhad::max_abs_diff(*p.q_axis, axis), qhad::max_abs_diff(*p.q_axis, -axis)), 1e-9);
  const auto u = qhad::q_type_conjugate_to_complex(h);
  ASSERT_TRUE(u);
  EXPECT_TRUE(qhad::is_complex_matrix(qhad::apply_move(h, qhad::GlobalConjugation{*u}), 1e-12));
}

TEST(Butson, RealMatrixAxisDefaultsToI) {
  const auto p = qhad::butson_profile(QMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}}));
  EXPECT_EQ(p.minimal_r, 2);
  ASSERT_TRUE(p.q_axis);
  EXPECT_EQ(*p.q_axis, I);
  EXPECT_EQ(qhad::q_type_conjugate_to_complex(QMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}})),
            Quaternion::one());
}

TEST(Butson, NonCirculantIsButsonButNotQType) {
  for (double t : qhad::parameter_grid(0.0, 2 * pi, 7)) {
    const auto p = qhad::butson_profile(qhad::order5_noncirculant(t));
    EXPECT_EQ(p.minimal_r, 4) << "t = " << t;
    EXPECT_FALSE(p.q_axis);
  }
}

TEST(Butson, SphereFamilyIsNotButson) {
  const auto p = qhad::butson_profile(qhad::order5_sphere(0.5));
  EXPECT_FALSE(p.minimal_r);
  EXPECT_THROW(qhad::butson_profile(qhad::order5_sphere(0.5), 0), std::invalid_argument);
}

TEST(Butson, RowEnumerationCounts) {
  // Only (w^2, w^4) and (w^4, w^2) complete 1 to zero.
  const auto e = qhad::enumerate_dephased_rows(6, 3);
  EXPECT_EQ(e.candidates, 36u);
  std::size_t brute = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const double re = 1 + std::cos(pi * a / 3) + std::cos(pi * b / 3);
      const double im = std::sin(pi * a / 3) + std::sin(pi * b / 3);
      if (std::hypot(re, im) < 1e-9) ++brute;
    }
  }
  EXPECT_EQ(e.valid, brute);
  EXPECT_EQ(e.valid, 2u);
  EXPECT_THROW(qhad::enumerate_dephased_rows(0, 3), std::invalid_argument);
}

TEST(Butson, BH45IsEmpty) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = qhad::bh45_emptiness();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.enumeration.candidates, 256u);
  EXPECT_EQ(r.enumeration.valid, 0u);
  EXPECT_TRUE(r.empty);
  EXPECT_FALSE(r.explanation.empty());
  EXPECT_LT(secs, 1.0);
}

}  // namespace

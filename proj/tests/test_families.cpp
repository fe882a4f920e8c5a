#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "qhad/families.hpp"

namespace {

using qhad::QMatrix;
using qhad::Quaternion;
using qhad::RootChoice;
using qhad::Sign;
using std::numbers::pi;

void expect_hadamard(const QMatrix& h, double tol = 1e-9) {
  const auto r = qhad::hadamard_check(h, tol);
  EXPECT_TRUE(r.pass) << "max deviation " << r.max_dev();
  EXPECT_LE(oracle::hadamard_defect(h), tol);
}

TEST(Families, FourierAllOrders) {
  for (int n = 1; n <= 12; ++n) {
    for (double theta : qhad::parameter_grid(0.0, 2 * pi, 4)) {
      for (double phi : qhad::parameter_grid(0.0, pi, 4)) {
        const QMatrix h = qhad::fourier_quat(n, theta, phi);
        expect_hadamard(h);
        EXPECT_TRUE(qhad::commuting_core_test(h));
      }
    }
  }
  EXPECT_THROW(qhad::fourier_quat(0, 0.0, 0.0), std::invalid_argument);
}

TEST(Families, Order3Family) {
  for (double theta : qhad::parameter_grid(-pi, pi, 5)) {
    for (double phi : qhad::parameter_grid(0.0, pi, 5)) expect_hadamard(qhad::order3(theta, phi));
  }
}

TEST(Families, Order4PrintedExample) {
  const auto e = qhad::order4_generic_entries(pi / 4, pi / 4, pi / 4);
  EXPECT_LE(qhad::max_abs_diff(e.b, Quaternion(-0.8, -0.6)), 1e-12);
  EXPECT_NEAR(e.c.w, (2.0 * std::sqrt(2.0) - 9.0) / 12.0, 1e-12);
  EXPECT_LE(qhad::max_abs_diff(e.d, Quaternion(-0.1, 0.3, 0.3, 0.9)), 1e-12);
  expect_hadamard(qhad::order4_generic(pi / 4, pi / 4, pi / 4));
}

TEST(Families, Order4GenericGrid) {
  for (double theta : {0.3, 1.4, 2.9}) {
    for (double phi : {0.2, 1.0, 2.5}) {
      for (double gamma : {0.0, 1.1, 4.0}) expect_hadamard(qhad::order4_generic(theta, phi, gamma));
    }
  }
  // a = -1 makes 1 + a vanish.
  EXPECT_THROW(qhad::order4_generic(pi, pi / 2, 0.0), std::domain_error);
}

TEST(Families, SphereFamily) {
  for (double t : qhad::parameter_grid(0.0, 2 * pi, 13)) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      const QMatrix h = qhad::order5_sphere(t, s);
      expect_hadamard(h);
      EXPECT_TRUE(qhad::is_circulant_core(h));
    }
  }
  const auto core = qhad::order5_sphere_core(0.0);
  const Quaternion ac = core[0] * core[2];
  const Quaternion ca = core[2] * core[0];
  EXPECT_NEAR((ac - ca).abs(), std::sqrt(25.0 / 8.0), 1e-12);
}

TEST(Families, OneParamWholeRangeBothRootsBothSigns) {
  for (double a0 : qhad::parameter_grid(qhad::kOneParamMin, qhad::kOneParamMax, 41)) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      for (RootChoice r : {RootChoice::principal, RootChoice::degenerate}) {
        const auto c = qhad::order5_oneparam_components(a0, s, r);
        expect_hadamard(qhad::circulant_from_row(c.core));
        EXPECT_NEAR(a0 * a0 + c.a1 * c.a1 + c.a2 * c.a2, 1.0, 1e-12);
        EXPECT_NEAR(c.b0, -0.5 - a0, 1e-15);
      }
    }
  }
}

TEST(Families, OneParamAtMinusQuarterMeetsSphereConstants) {
  const auto c = qhad::order5_oneparam_components(-0.25);
  EXPECT_NEAR(c.b1, std::sqrt(15.0) / 4.0, 1e-12);
  EXPECT_NEAR(c.d1, -std::sqrt(5.0 / 48.0), 1e-12);
  EXPECT_NEAR(c.d2 * c.d2, 5.0 / 6.0, 1e-12);
  const auto deg = qhad::order5_oneparam_components(-0.25, Sign::plus, RootChoice::degenerate);
  EXPECT_NEAR(deg.a2, 0.0, 1e-12);  // degenerate root passes through a1 = -b1
  EXPECT_NEAR(deg.a1, -deg.b1, 1e-12);
}

TEST(Families, OneParamEndpointsAreComplex) {
  for (double a0 : {qhad::kOneParamMin, qhad::kOneParamMax}) {
    for (RootChoice r : {RootChoice::principal, RootChoice::degenerate}) {
      const auto c = qhad::order5_oneparam_components(a0, Sign::plus, r);
      for (const auto& q : c.core) {
        EXPECT_LE(std::abs(q.y), 1e-9);
        EXPECT_LE(std::abs(q.z), 1e-9);
      }
    }
  }
  EXPECT_THROW(qhad::order5_oneparam_components(0.4), std::domain_error);
  EXPECT_THROW(qhad::order5_oneparam_components(-0.9), std::domain_error);
}

TEST(Families, PrintedClosedFormsAreInconsistent) {
  // The alternative closed forms for a1, a2 violate the unit-norm constraint
  // away from the endpoints; the quadratic is used instead.
  const auto chk = qhad::closed_form_check(-0.25, Sign::plus);
  EXPECT_FALSE(chk.consistent);
  EXPECT_GT(chk.norm_defect, 0.1);
  EXPECT_NEAR(qhad::order5_oneparam_components(-0.25).a1, std::sqrt(5.0 / 48.0), 1e-12);
}

TEST(Families, NonCirculantPattern) {
  for (double t : qhad::parameter_grid(0.0, 2 * pi, 10)) {
    const QMatrix h = qhad::order5_noncirculant(t);
    expect_hadamard(h);
    EXPECT_FALSE(qhad::is_circulant_core(h));
  }
}

TEST(Families, GenerateDispatch) {
  qhad::FamilyPoint p;
  p.family = qhad::FamilyId::order5_oneparam;
  EXPECT_THROW(qhad::generate(p), std::invalid_argument);  // a0 is required
  p.params["a0"] = 0.1;
  EXPECT_EQ(qhad::generate(p), qhad::order5_oneparam(0.1));
  p.params["bogus"] = 1.0;
  EXPECT_THROW(qhad::generate(p), std::invalid_argument);

  qhad::FamilyPoint f;
  f.family = qhad::FamilyId::fourier;
  f.params["n"] = 2.5;
  EXPECT_THROW(qhad::generate(f), std::invalid_argument);
  f.params["n"] = 3;
  EXPECT_EQ(qhad::generate(f), qhad::fourier_quat(3, 0.0, pi / 2));
}

TEST(Families, NamesRoundTrip) {
  for (auto id : {qhad::FamilyId::fourier, qhad::FamilyId::order3, qhad::FamilyId::order4_generic,
                  qhad::FamilyId::order5_sphere, qhad::FamilyId::order5_oneparam,
                  qhad::FamilyId::order5_noncirc}) {
    EXPECT_EQ(qhad::family_from_name(qhad::family_name(id)), id);
  }
  EXPECT_FALSE(qhad::family_from_name("order6"));
}

TEST(Families, ParameterGrid) {
  EXPECT_TRUE(qhad::parameter_grid(0.0, 1.0, 0).empty());
  EXPECT_EQ(qhad::parameter_grid(0.5, 1.0, 1), std::vector<double>{0.5});
  const auto g = qhad::parameter_grid(-1.0, 1.0, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), -1.0);
  EXPECT_DOUBLE_EQ(g.back(), 1.0);
  EXPECT_DOUBLE_EQ(g[2], 0.0);
}

}  // namespace

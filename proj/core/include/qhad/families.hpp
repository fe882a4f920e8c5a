#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhad/qmatrix.hpp"

namespace qhad {

enum class Sign { plus, minus };
enum class RootChoice { principal, degenerate };

constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

enum class FamilyId { fourier, order3, order4_generic, order5_sphere, order5_oneparam, order5_noncirc };

/// CLI spelling, e.g. "order4-generic".
std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// Generator input: family, named real parameters and sign branches.
struct FamilyPoint {
  FamilyId family = FamilyId::fourier;
  std::map<std::string, double, std::less<>> params;
  Sign sign_a = Sign::plus;
  Sign sign_d = Sign::plus;
  RootChoice root = RootChoice::principal;
};

/// Dispatches to the generator below. Missing angles default to theta = 0,
/// phi = pi/2, gamma = 0, t = 0; `n` (fourier) and `a0` (order5-oneparam) are
/// required. Throws std::invalid_argument for unknown or missing parameters.
QMatrix generate(const FamilyPoint& point);

/// Entry (j, k) = exp_axis(sphere_axis(theta, phi), 2*pi*j*k/n).
QMatrix fourier_quat(int n, double theta, double phi);

/// Circulant core (a, conj(a)) with a = -1/2 + (sqrt(3)/2)·sphere_axis(theta, phi).
QMatrix order3(double theta, double phi);

struct Order4Entries {
  Quaternion a, b, c, d;
};

/// The generic order-4 family entries. Throws std::domain_error when a = -1.
Order4Entries order4_generic_entries(double theta, double phi, double gamma);
QMatrix order4_generic(double theta, double phi, double gamma);

/// Core (a, conj(a), c, conj(c)) with a = -1/4 ± sqrt(15/16)·i and
/// c = -1/4 ∓ sqrt(5/48)·i + sqrt(5/6)(cos t·j + sin t·k).
QMatrix order5_sphere(double t, Sign s_a = Sign::plus);
std::vector<Quaternion> order5_sphere_core(double t, Sign s_a = Sign::plus);

inline const double kOneParamMin = (-1.0 - std::sqrt(5.0)) / 4.0;
inline const double kOneParamMax = (-1.0 + std::sqrt(5.0)) / 4.0;

/// Components of the order-5 one-parameter circulant-core family.
struct OneParamComponents {
  double a0, a1, a2;
  double b0, b1;
  double d1, d2;
  /// The two roots of the quadratic in a1 (principal first).
  double principal_a1, degenerate_a1;
  std::vector<Quaternion> core;  ///< (a, b, c, d), c = -1 - a - b - d
};

/// a1 solves a0² + a1² + ((a1 + b1) d2 / (d1 - b1))² = 1 and a2 = (a1 + b1) d2 / (d1 - b1).
/// The degenerate root is the one continuously joined to a1 = -b1 (where a2
/// vanishes at a0 = -1/4); the principal root is the other. Throws
/// std::domain_error for a0 outside [kOneParamMin, kOneParamMax].
OneParamComponents order5_oneparam_components(double a0, Sign s_d = Sign::plus,
                                              RootChoice root = RootChoice::principal);
QMatrix order5_oneparam(double a0, Sign s_d = Sign::plus, RootChoice root = RootChoice::principal);

/// Diagnostic for the alternative closed forms of a1 and a2 with matched ±
/// signs. Reports how far they are from the unit-norm and quadratic
/// constraints; `consistent` is true only if both residuals are below 1e-9.
struct ClosedFormCheck {
  double a1 = 0.0;
  double a2 = 0.0;
  double norm_defect = 0.0;        ///< |a0² + a1² + a2² - 1|
  double quadratic_residual = 0.0;  ///< defining quadratic evaluated at a1
  double kappa_residual = 0.0;      ///< |a2 - (a1 + b1) d2 / (d1 - b1)|, d2 > 0
  bool consistent = false;
};
ClosedFormCheck closed_form_check(double a0, Sign branch);

/// Non-circulant order-5 pattern with a = i, c = -1 and
/// b, d = -i/2 ± (sqrt(3)/2)(cos t·j + sin t·k).
QMatrix order5_noncirculant(double t);

/// `steps` evenly spaced values from lo to hi inclusive (lo alone if steps == 1).
std::vector<double> parameter_grid(double lo, double hi, std::size_t steps);

}  // namespace qhad

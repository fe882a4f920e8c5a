#include "qhad/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qhad {

namespace {

using std::numbers::pi;

constexpr std::array<std::pair<FamilyId, std::string_view>, 6> kNames{{
    {FamilyId::fourier, "fourier"},
    {FamilyId::order3, "order3"},
    {FamilyId::order4_generic, "order4-generic"},
    {FamilyId::order5_sphere, "order5-sphere"},
    {FamilyId::order5_oneparam, "order5-oneparam"},
    {FamilyId::order5_noncirc, "order5-noncirc"},
}};

double param(const FamilyPoint& p, std::string_view key, std::optional<double> fallback) {
  if (auto it = p.params.find(key); it != p.params.end()) {
    return it->second;
  }
  if (!fallback) {
    throw std::invalid_argument("missing parameter '" + std::string(key) + "' for family " +
                                std::string(family_name(p.family)));
  }
  return *fallback;
}

void require_known(const FamilyPoint& p, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : p.params) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("unknown parameter '" + key + "' for family " +
                                  std::string(family_name(p.family)));
    }
  }
}

// Radicands may dip below zero by rounding at the ends of the a0 range.
double checked_sqrt(double v) {
  if (v < -1e-12) {
    throw std::logic_error("order5_oneparam: negative radicand inside the parameter range");
  }
  return std::sqrt(std::max(v, 0.0));
}

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& [key, n] : kNames) {
    if (n == name) return key;
  }
  return std::nullopt;
}

QMatrix generate(const FamilyPoint& p) {
  switch (p.family) {
    case FamilyId::fourier: {
      require_known(p, {"n", "theta", "phi"});
      const double n = param(p, "n", std::nullopt);
      if (n != std::floor(n)) {
        throw std::invalid_argument("fourier: n must be an integer");
      }
      return fourier_quat(static_cast<int>(n), param(p, "theta", 0.0), param(p, "phi", pi / 2));
    }
    case FamilyId::order3:
      require_known(p, {"theta", "phi"});
      return order3(param(p, "theta", 0.0), param(p, "phi", pi / 2));
    case FamilyId::order4_generic:
      require_known(p, {"theta", "phi", "gamma"});
      return order4_generic(param(p, "theta", 0.0), param(p, "phi", pi / 2),
                            param(p, "gamma", 0.0));
    case FamilyId::order5_sphere:
      require_known(p, {"t"});
      return order5_sphere(param(p, "t", 0.0), p.sign_a);
    case FamilyId::order5_oneparam:
      require_known(p, {"a0"});
      return order5_oneparam(param(p, "a0", std::nullopt), p.sign_d, p.root);
    case FamilyId::order5_noncirc:
      require_known(p, {"t"});
      return order5_noncirculant(param(p, "t", 0.0));
  }
  throw std::invalid_argument("unknown family");
}

QMatrix fourier_quat(int n, double theta, double phi) {
  if (n <= 0) {
    throw std::invalid_argument("fourier_quat: order must be positive");
  }
  const Quaternion axis = sphere_axis(theta, phi);
  const auto order = static_cast<std::size_t>(n);
  QMatrix h(order);
  for (std::size_t j = 0; j < order; ++j) {
    for (std::size_t k = 0; k < order; ++k) {
      // Reduce jk mod n so large orders keep full angular precision.
      const auto power = static_cast<double>((j * k) % order);
      h(j, k) = exp_axis(axis, 2.0 * pi * power / n);
    }
  }
  return h;
}

QMatrix order3(double theta, double phi) {
  const Quaternion a = Quaternion(-0.5) + sphere_axis(theta, phi) * (std::sqrt(3.0) / 2.0);
  const std::array<Quaternion, 2> row{a, conj(a)};
  return circulant_from_row(row);
}

Order4Entries order4_generic_entries(double theta, double phi, double gamma) {
  const Quaternion a(std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi),
                     std::cos(phi), 0.0);
  const Quaternion one_plus_a = Quaternion::one() + a;
  if (one_plus_a.abs() < 1e-12) {
    throw std::domain_error("order4_generic: parameters give a = -1");
  }
  const Quaternion x(0.0, std::cos(gamma), std::sin(gamma), 0.0);
  const Quaternion a_hat(a.w, a.x, 0.0, 0.0);
  const Quaternion one_plus_a_hat = Quaternion::one() + a_hat;
  const Quaternion unit_hat = one_plus_a_hat / one_plus_a_hat.abs();
  const Quaternion unit = one_plus_a / one_plus_a.abs();

  const Quaternion bb = unit_hat * Quaternion::i();
  const Quaternion cc = x * unit;
  const Quaternion dd = x * unit_hat * Quaternion::i();
  return {a, bb * bb, cc * cc, dd * dd};
}

QMatrix order4_generic(double theta, double phi, double gamma) {
  const auto [a, b, c, d] = order4_generic_entries(theta, phi, gamma);
  const Quaternion one = Quaternion::one();
  return QMatrix::from_rows({
      {one, one, one, one},
      {one, a, b, -one - a - b},
      {one, c, d, -one - c - d},
      {one, -one - a - c, -one - b - d, one + a + b + c + d},
  });
}

std::vector<Quaternion> order5_sphere_core(double t, Sign s_a) {
  const double s = sign_value(s_a);
  const Quaternion a(-0.25, s * std::sqrt(15.0 / 16.0), 0.0, 0.0);
  const double r = std::sqrt(5.0 / 6.0);
  const Quaternion c(-0.25, -s * std::sqrt(5.0 / 48.0), r * std::cos(t), r * std::sin(t));
  return {a, conj(a), c, conj(c)};
}

QMatrix order5_sphere(double t, Sign s_a) { return circulant_from_row(order5_sphere_core(t, s_a)); }

OneParamComponents order5_oneparam_components(double a0, Sign s_d, RootChoice root) {
  if (!(a0 >= kOneParamMin - 1e-12 && a0 <= kOneParamMax + 1e-12)) {
    throw std::domain_error("order5_oneparam: a0 outside [(-1-sqrt 5)/4, (-1+sqrt 5)/4]");
  }
  OneParamComponents out{};
  out.a0 = a0;
  out.b0 = -0.5 - a0;
  const double root_term = std::sqrt((1.0 - 2.0 * a0) * (3.0 + 2.0 * a0));
  out.b1 = root_term / 2.0;
  out.d1 = -(1.0 + 4.0 * a0 * a0) / (2.0 * root_term);
  out.d2 = sign_value(s_d) * checked_sqrt(2.0 * (1.0 - a0) * (-1.0 + 2.0 * a0 + 4.0 * a0 * a0) /
                                          (-3.0 + 4.0 * a0 + 4.0 * a0 * a0));
  if (out.d1 == out.b1) {
    throw std::domain_error("order5_oneparam: b1 = d1");
  }

  // (1 + k²) a1² + 2 k² b1 a1 + (k² b1² + a0² - 1) = 0 with k = d2 / (d1 - b1).
  const double k = out.d2 / (out.d1 - out.b1);
  const double qa = 1.0 + k * k;
  const double qb = 2.0 * k * k * out.b1;
  const double qc = k * k * out.b1 * out.b1 + a0 * a0 - 1.0;
  const double disc = checked_sqrt(qb * qb - 4.0 * qa * qc);
  double r1 = (-qb + disc) / (2.0 * qa);
  double r2 = (-qb - disc) / (2.0 * qa);
  if (std::abs(r1 + out.b1) < std::abs(r2 + out.b1)) {
    std::swap(r1, r2);
  }
  out.principal_a1 = r1;
  out.degenerate_a1 = r2;
  out.a1 = root == RootChoice::principal ? r1 : r2;
  out.a2 = k * (out.a1 + out.b1);

  const Quaternion a(a0, out.a1, out.a2, 0.0);
  const Quaternion b(out.b0, out.b1, 0.0, 0.0);
  const Quaternion d(out.b0, out.d1, out.d2, 0.0);
  const Quaternion c = -Quaternion::one() - a - b - d;
  out.core = {a, b, c, d};
  return out;
}

QMatrix order5_oneparam(double a0, Sign s_d, RootChoice root) {
  return circulant_from_row(order5_oneparam_components(a0, s_d, root).core);
}

ClosedFormCheck closed_form_check(double a0, Sign branch) {
  const OneParamComponents ref = order5_oneparam_components(a0, Sign::plus);
  const double s = sign_value(branch);
  const double poly = 1.0 - 3.0 * a0 + 2.0 * a0 * a0;
  ClosedFormCheck out;
  out.a1 = (std::sqrt(1.0 - 2.0 * a0) * (-1.0 + 2.0 * a0 + 4.0 * a0 * a0) +
            s * std::sqrt(2.0 * (3.0 + 2.0 * a0) * poly)) /
           (2.0 * (a0 - 1.0) * std::sqrt(3.0 + 2.0 * a0));
  out.a2 = (std::sqrt(2.0 - 4.0 * a0) * (-s + s * a0) + std::sqrt((3.0 + 2.0 * a0) * poly)) /
           (2.0 * (1.0 - a0) * std::sqrt(1.0 - 2.0 * a0));
  out.norm_defect = std::abs(a0 * a0 + out.a1 * out.a1 + out.a2 * out.a2 - 1.0);
  const double k = ref.d2 / (ref.d1 - ref.b1);
  const double lifted = (out.a1 + ref.b1) * k;
  out.quadratic_residual = std::abs(a0 * a0 + out.a1 * out.a1 + lifted * lifted - 1.0);
  out.kappa_residual = std::abs(out.a2 - lifted);
  out.consistent = out.norm_defect <= 1e-9 && out.quadratic_residual <= 1e-9;
  return out;
}

QMatrix order5_noncirculant(double t) {
  const double r = std::sqrt(3.0) / 2.0;
  const Quaternion one = Quaternion::one();
  const Quaternion a = Quaternion::i();
  const Quaternion b(0.0, -0.5, r * std::cos(t), r * std::sin(t));
  const Quaternion c(-1.0);
  const Quaternion d(0.0, -0.5, -r * std::cos(t), -r * std::sin(t));
  return QMatrix::from_rows({
      {one, one, one, one, one},
      {one, a, b, c, d},
      {one, b, a, d, c},
      {one, c, d, a, b},
      {one, d, c, b, a},
  });
}

std::vector<double> parameter_grid(double lo, double hi, std::size_t steps) {
  std::vector<double> out;
  if (steps == 0) return out;
  if (steps == 1) return {lo};
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  out.back() = hi;
  return out;
}

}  // namespace qhad

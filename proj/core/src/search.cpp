#include "qhad/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "qhad/families.hpp"
#include "qhad/least_squares.hpp"

namespace qhad {

namespace {

constexpr double kFingerprintStep = 1e-6;
constexpr double kPreconditionTol = 1e-6;

void check_shape(int order, std::size_t length) {
  if (order < 3 || order > 5) {
    throw std::invalid_argument("circulant_residual: order must be 3, 4 or 5");
  }
  if (length != static_cast<std::size_t>(order - 1)) {
    throw std::invalid_argument("circulant_residual: core must have order - 1 entries");
  }
}

std::vector<Quaternion> rotated(std::span<const Quaternion> core, std::size_t k) {
  std::vector<Quaternion> out(core.size());
  for (std::size_t j = 0; j < core.size(); ++j) {
    out[j] = core[(j + k) % core.size()];
  }
  return out;
}

std::vector<Quaternion> conjugated(const Quaternion& u, std::span<const Quaternion> core) {
  std::vector<Quaternion> out;
  out.reserve(core.size());
  for (const auto& q : core) out.push_back(group_conj(u, q));
  return out;
}

double max_diff(std::span<const Quaternion> a, std::span<const Quaternion> b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, max_abs_diff(a[j], b[j]));
  return m;
}

double cross_norm(const Quaternion& p, const Quaternion& q) {
  const double cx = p.y * q.z - p.z * q.y;
  const double cy = p.z * q.x - p.x * q.z;
  const double cz = p.x * q.y - p.y * q.x;
  return std::sqrt(cx * cx + cy * cy + cz * cz);
}

std::optional<Classification> match_fourier(std::span<const Quaternion> core, double tol) {
  const Quaternion* ref = nullptr;
  for (const auto& q : core) {
    if (q.imag_norm() > tol && (ref == nullptr || q.imag_norm() > ref->imag_norm())) ref = &q;
  }
  for (const auto& q : core) {
    if (ref != nullptr && cross_norm(q, *ref) > tol) return std::nullopt;
  }
  const Quaternion u = ref == nullptr ? Quaternion::one() : normalize_to_complex(*ref);
  const auto canon = conjugated(u, core);
  double worst = 0.0;
  for (const auto& q : canon) {
    worst = std::max({worst, std::abs(q.y), std::abs(q.z)});
    worst = std::max(worst, max_abs_diff(pow(q, 5), Quaternion::one()));
  }
  if (worst > tol) return std::nullopt;
  Classification c;
  c.label = Label::fourier;
  c.conjugator = u;
  c.match_residual = worst;
  c.detail = "entries share one axis and are fifth roots of unity";
  return c;
}

// The first matching rotation wins so the reported parameters do not flip
// between equally good rotations under conjugation of the input.
std::optional<Classification> match_sphere(std::span<const Quaternion> core, double tol) {
  const double im_a = std::sqrt(15.0) / 4.0;
  for (std::size_t k = 0; k < core.size(); ++k) {
    const auto r = rotated(core, k);
    bool shape = std::abs(r[0].imag_norm() - im_a) <= 10 * tol;
    for (const auto& q : r) shape = shape && std::abs(q.w + 0.25) <= 10 * tol;
    shape = shape && max_abs_diff(r[1], conj(r[0])) <= 10 * tol &&
            max_abs_diff(r[3], conj(r[2])) <= 10 * tol;
    if (!shape) continue;
    const Quaternion u = normalize_to_complex(r[0]);
    const auto canon = conjugated(u, r);
    const double t = std::atan2(canon[2].z, canon[2].y);
    const double dev = max_diff(canon, order5_sphere_core(t, Sign::plus));
    if (dev <= tol) {
      Classification c;
      c.label = Label::sphere_family;
      c.params["t"] = t;
      c.conjugator = u;
      c.rotation = k;
      c.match_residual = dev;
      c.detail = "pattern (A, conj A, C, conj C) with real parts -1/4";
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Classification> match_one_param(std::span<const Quaternion> core, double tol) {
  std::optional<Classification> best;
  for (std::size_t k = 0; k < core.size(); ++k) {
    const auto r = rotated(core, k);
    const double a0 = 0.5 * (r[0].w + r[2].w);
    const double b0 = 0.5 * (r[1].w + r[3].w);
    if (std::abs(r[0].w - r[2].w) > 10 * tol || std::abs(r[1].w - r[3].w) > 10 * tol ||
        std::abs(a0 + b0 + 0.5) > 10 * tol) {
      continue;
    }
    if (a0 < kOneParamMin - 10 * tol || a0 > kOneParamMax + 10 * tol) continue;
    const double a0c = std::clamp(a0, kOneParamMin, kOneParamMax);
    const Quaternion u = normalize_pair(r[1], r[3]);
    const auto canon = conjugated(u, r);
    const Sign s_d = canon[3].y < 0.0 ? Sign::minus : Sign::plus;
    for (RootChoice root : {RootChoice::principal, RootChoice::degenerate}) {
      OneParamComponents ref;
      try {
        ref = order5_oneparam_components(a0c, s_d, root);
      } catch (const std::exception&) {
        continue;
      }
      const double dev = max_diff(canon, ref.core);
      if (dev <= tol && (!best || dev < best->match_residual)) {
        Classification c;
        c.label = Label::one_param;
        c.params["a0"] = a0c;
        c.params["s_d"] = sign_value(s_d);
        c.params["root"] = root == RootChoice::principal ? 0.0 : 1.0;
        c.conjugator = u;
        c.rotation = k;
        c.match_residual = dev;
        c.detail = "one complex-alignable entry, real parts (a0, -1/2 - a0, a0, -1/2 - a0)";
        best = std::move(c);
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

Classification classify_order3(std::span<const Quaternion> core, double tol) {
  Classification c;
  const Quaternion& a = core[0];
  const double im = std::sqrt(3.0) / 2.0;
  const double theta = std::atan2(a.y, a.x);
  const double phi = std::acos(std::clamp(a.z / im, -1.0, 1.0));
  const auto ref = core_row(order3(theta, phi));
  const double dev = max_diff(core, ref);
  c.match_residual = dev;
  if (dev <= tol) {
    c.label = Label::order3_family;
    c.params["theta"] = theta;
    c.params["phi"] = phi;
    c.detail = "a = -1/2 + (sqrt 3/2) axis, b = conj a";
  } else {
    c.detail = "core does not match the order-3 family";
  }
  return c;
}

Classification classify_order4(std::span<const Quaternion> core, double tol) {
  Classification c;
  double dev = 0.0;
  for (const auto& q : core) {
    const double sign = q.w < 0.0 ? -1.0 : 1.0;
    dev = std::max(dev, max_abs_diff(q, Quaternion(sign)));
  }
  c.match_residual = dev;
  if (dev <= tol) {
    c.label = Label::f2_tensor_f2;
    c.detail = "real +-1 core; the real Hadamard matrix of order 4 is unique up to equivalence";
  } else {
    c.detail = "core is not real";
  }
  return c;
}

std::vector<Quaternion> random_core(int order, std::uint64_t seed, std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  std::vector<Quaternion> core;
  for (int j = 0; j < order - 1; ++j) {
    Quaternion q;
    do {
      q = Quaternion(normal(rng), normal(rng), normal(rng), normal(rng));
    } while (q.abs() < 1e-6);
    core.push_back(q / q.abs());
  }
  return core;
}

Eigen::VectorXd pack(std::span<const Quaternion> core) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(4 * core.size()));
  for (std::size_t j = 0; j < core.size(); ++j) {
    const auto b = static_cast<Eigen::Index>(4 * j);
    x(b) = core[j].w;
    x(b + 1) = core[j].x;
    x(b + 2) = core[j].y;
    x(b + 3) = core[j].z;
  }
  return x;
}

std::vector<Quaternion> unpack(const Eigen::VectorXd& x) {
  std::vector<Quaternion> core(static_cast<std::size_t>(x.size() / 4));
  for (std::size_t j = 0; j < core.size(); ++j) {
    const auto b = static_cast<Eigen::Index>(4 * j);
    core[j] = Quaternion(x(b), x(b + 1), x(b + 2), x(b + 3));
  }
  return core;
}

struct Attempt {
  bool converged = false;
  std::vector<Quaternion> core;
  double residual = 0.0;
};

Attempt run_restart(int order, std::uint64_t seed, std::size_t restart,
                    const SolveOptions& options) {
  const ResidualFunction f = [order](const Eigen::VectorXd& x) {
    const auto r = circulant_residual(order, unpack(x));
    return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size())));
  };
  // Keep iterating past the convergence threshold: at singular roots (the real
  // order-4 core) the residual is quadratic in the distance to the root.
  LeastSquaresOptions ls;
  ls.max_iterations = options.max_iterations;
  ls.tolerance = options.polish;
  const auto result = damped_least_squares(f, pack(random_core(order, seed, restart)), ls);
  Attempt a;
  a.converged = result.residual_norm <= options.convergence;
  a.core = unpack(result.x);
  a.residual = result.residual_norm;
  return a;
}

}  // namespace

std::string_view label_name(Label label) {
  switch (label) {
    case Label::fourier: return "fourier";
    case Label::sphere_family: return "sphere_family";
    case Label::one_param: return "one_param";
    case Label::order3_family: return "order3_family";
    case Label::f2_tensor_f2: return "f2_tensor_f2";
    case Label::unclassified: return "unclassified";
  }
  return "unclassified";
}

Fingerprint fingerprint(std::span<const Quaternion> core) {
  Fingerprint fp;
  fp.reserve(core.size());
  for (const auto& q : core) {
    fp.emplace_back(std::llround(q.w / kFingerprintStep), std::llround(q.imag_norm() / kFingerprintStep));
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

std::vector<double> circulant_residual(int order, std::span<const Quaternion> core) {
  check_shape(order, core.size());
  const std::size_t m = core.size();
  std::vector<double> out;
  out.reserve(m + 4 * (1 + m / 2));
  for (const auto& q : core) out.push_back(q.norm2() - 1.0);

  auto push = [&out](const Quaternion& q) {
    out.insert(out.end(), {q.w, q.x, q.y, q.z});
  };
  Quaternion sum = Quaternion::one();
  for (const auto& q : core) sum += q;
  push(sum);
  for (std::size_t s = 1; s <= m / 2; ++s) {
    Quaternion acc = Quaternion::one();
    for (std::size_t j = 0; j < m; ++j) acc += core[j] * conj(core[(j + m - s) % m]);
    push(acc);
  }
  return out;
}

double circulant_residual_norm(int order, std::span<const Quaternion> core) {
  double s = 0.0;
  for (double v : circulant_residual(order, core)) s += v * v;
  return std::sqrt(s);
}

Classification classify_order5(std::span<const Quaternion> core, double tol) {
  const double res = circulant_residual_norm(5, core);
  if (res > kPreconditionTol) {
    throw std::invalid_argument("classify_order5: circulant residual " + std::to_string(res) +
                                " exceeds 1e-6");
  }
  if (auto c = match_fourier(core, tol)) return *c;
  if (auto c = match_sphere(core, tol)) return *c;
  if (auto c = match_one_param(core, tol)) return *c;
  Classification c;
  c.detail = "no family matched";
  return c;
}

Classification classify_circulant(int order, std::span<const Quaternion> core, double tol) {
  const double res = circulant_residual_norm(order, core);
  if (res > kPreconditionTol) {
    throw std::invalid_argument("classify_circulant: circulant residual " + std::to_string(res) +
                                " exceeds 1e-6");
  }
  switch (order) {
    case 3: return classify_order3(core, tol);
    case 4: return classify_order4(core, tol);
    default: return classify_order5(core, tol);
  }
}

SolveResult solve_circulant(int order, std::size_t restarts, std::uint64_t seed,
                            const SolveOptions& options) {
  check_shape(order, static_cast<std::size_t>(order - 1));
  if (restarts == 0) {
    throw std::invalid_argument("solve_circulant: restarts must be at least 1");
  }
  std::vector<Attempt> attempts(restarts);
  const unsigned workers = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(restarts));
  if (workers == 1) {
    for (std::size_t r = 0; r < restarts; ++r) attempts[r] = run_restart(order, seed, r, options);
  } else {
    // Each worker owns a strided slice of the restart indices.
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < restarts; r += workers) {
          attempts[r] = run_restart(order, seed, r, options);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SolveResult out;
  out.diagnostics.restarts = restarts;
  std::map<Fingerprint, CirculantSolution> unique;
  for (std::size_t r = 0; r < restarts; ++r) {
    auto& a = attempts[r];
    if (!a.converged) {
      ++out.diagnostics.dropped;
      continue;
    }
    ++out.diagnostics.converged;
    Classification cls = classify_circulant(order, a.core, options.classify_tol);
    ++out.diagnostics.label_counts[cls.label];
    Fingerprint key = fingerprint(a.core);
    if (unique.contains(key)) continue;
    CirculantSolution s;
    s.order = order;
    s.core = std::move(a.core);
    s.residual = a.residual;
    s.classification = std::move(cls);
    s.key = key;
    s.restart = r;
    unique.emplace(std::move(key), std::move(s));
  }
  out.diagnostics.distinct = unique.size();
  for (auto& [key, s] : unique) out.solutions.push_back(std::move(s));
  return out;
}

}  // namespace qhad

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhad/quaternion.hpp"

namespace qhad {

enum class Label { fourier, sphere_family, one_param, order3_family, f2_tensor_f2, unclassified };

std::string_view label_name(Label label);

struct Classification {
  Label label = Label::unclassified;
  /// Family parameters: t (sphere_family), a0 / s_d / root (one_param),
  /// theta / phi (order3_family). Angles and signs are measured in the
  /// canonical frame and are not conjugation invariants; a0 is.
  std::map<std::string, double, std::less<>> params;
  Quaternion conjugator = Quaternion::one();  ///< frame used for matching
  std::size_t rotation = 0;                    ///< cyclic core rotation used for matching
  double match_residual = 0.0;                 ///< max component distance to the named family
  std::string detail;
};

/// Multiset of (Re, |Im|) pairs over the core, rounded to 1e-6 and sorted.
/// Invariant under global conjugation and cyclic rotation of the core.
using Fingerprint = std::vector<std::pair<std::int64_t, std::int64_t>>;
Fingerprint fingerprint(std::span<const Quaternion> core);

/// Real components of the defining equations of a dephased circulant-core
/// Hadamard matrix: unit-norm defects |x|² - 1, the row-sum 1 + Σ core, and
/// for each shift s = 1..⌊m/2⌋ the orthogonality 1 + Σ_j c_j conj(c_{j-s}).
/// Throws std::invalid_argument unless order is 3, 4 or 5 and the core has
/// order - 1 entries.
std::vector<double> circulant_residual(int order, std::span<const Quaternion> core);
double circulant_residual_norm(int order, std::span<const Quaternion> core);

/// Order-5 classifier. Tries, in order: all entries sharing an axis and being
/// fifth roots of unity (fourier); a cyclic rotation matching (A, Ā, C, C̄)
/// with real parts -1/4 (sphere_family); a rotation with real parts
/// (a0, -1/2 - a0, a0, -1/2 - a0) that matches the one-parameter generator
/// after normalising b onto +i and d into the i-j plane (one_param).
/// Throws std::invalid_argument if the circulant residual exceeds 1e-6.
Classification classify_order5(std::span<const Quaternion> core, double tol = 1e-6);

/// Dispatches on order 3 (order3_family), 4 (f2_tensor_f2) and 5.
Classification classify_circulant(int order, std::span<const Quaternion> core, double tol = 1e-6);

struct CirculantSolution {
  int order = 0;
  std::vector<Quaternion> core;
  double residual = 0.0;
  Classification classification;
  Fingerprint key;
  std::size_t restart = 0;  ///< first restart that produced this fingerprint

  Label label() const { return classification.label; }
  const Quaternion& conjugator() const { return classification.conjugator; }
};

struct SolveOptions {
  int max_iterations = 500;
  double convergence = 1e-8;  ///< a restart counts as converged at or below this residual
  double polish = 1e-14;      ///< iteration continues down to this residual
  double classify_tol = 1e-6;
  unsigned threads = 1;
};

struct SolveDiagnostics {
  std::size_t restarts = 0;
  std::size_t converged = 0;
  std::size_t dropped = 0;
  std::size_t distinct = 0;
  std::map<Label, std::size_t> label_counts;  ///< every converged restart, classified individually
};

struct SolveResult {
  std::vector<CirculantSolution> solutions;  ///< deduplicated, sorted by fingerprint
  SolveDiagnostics diagnostics;
};

/// Random unit-quaternion starts (one deterministic stream per (seed, restart)),
/// damped least squares on circulant_residual, dedup by fingerprint, classify.
/// Output is identical for any thread count.
SolveResult solve_circulant(int order, std::size_t restarts, std::uint64_t seed,
                            const SolveOptions& options = {});

}  // namespace qhad

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mutflow/canonical.hpp"
#include "mutflow/permutation.hpp"
#include "mutflow/seed.hpp"
#include "mutflow/tropical.hpp"

namespace mutflow {

// Caps on the exact symbolic computations; exceeding them raises
// ResourceLimitError rather than silently truncating.
struct ResourceLimits {
  int max_symbolic_rank = 5;
  int max_symbolic_length = 30;
};

// Initial matrix, mutation directions (0-based) and the relabeling
// permutation. sigma may be omitted and searched for.
struct MutationPlan {
  ExchangeMatrix b;
  std::vector<int> seq;
  std::optional<Permutation> sigma;

  MutationPlan(ExchangeMatrix bb, std::vector<int> s, std::optional<Permutation> sg = {});
};

// sigma-periodicity of the seed mutation sequence over Q_+(y): exact
// symbolic check of the B-, x- and y-conditions. The traces are computed
// lazily (B, then y, then x) since a failed cheap condition settles the
// verdict.
bool check_seed_periodicity(const MutationPlan& plan, const ResourceLimits& limits = {});

// C[T] and G[T] both equal the permutation matrix of sigma, with the
// tropical sign sequence.
bool check_tropical_periodicity(const MutationPlan& plan);

// Runs signed mutations with the tropical sign sequence and the common
// skew-symmetrizer from sample random phase points; the orbit must return
// under sigma to within tol, and B must return exactly.
bool check_signed_periodicity(const MutationPlan& plan, int samples,
                              std::uint64_t rng_seed = 20240901, double tol = 1e-9);

// The composed integer tau-matrices on (u,p) equal the permutation matrices
// of sigma; exact integer check.
bool check_canonical_tropical_periodicity(const MutationPlan& plan);

// The unique sigma candidate read off C[T] if it is a permutation matrix
// and G[T] matches it; nullopt otherwise.
std::optional<Permutation> find_sigma(const ExchangeMatrix& b, const std::vector<int>& seq);

// Block extension [[B, -I], [D, 0]] of size 2n; always invertible
// (|det| = prod d_i), skew-symmetrized by diag(D, I).
ExchangeMatrix invertible_extension(const ExchangeMatrix& b);

// Result of running all four equivalent periodicity criteria. The verdicts
// must agree; a disagreement raises InvariantViolation (it falsifies a
// theorem and means a bug).
struct PeriodicityReport {
  bool seed_periodic = false;
  bool tropical_periodic = false;
  bool signed_periodic = false;
  bool canonical_tropical_periodic = false;
  Permutation sigma{1};
  std::vector<Sign> signs;
  bool sigma_found = true;    // false when no sigma candidate exists
  std::string witness;        // first failing detail, empty when periodic

  bool periodic() const { return tropical_periodic; }
};

PeriodicityReport check_all(const MutationPlan& plan, int samples = 20,
                            std::uint64_t rng_seed = 20240901,
                            const ResourceLimits& limits = {});

}  // namespace mutflow

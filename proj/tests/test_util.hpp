#pragma once

#include <random>
#include <vector>

#include "mutflow/intmatrix.hpp"
#include "mutflow/seed.hpp"
#include "mutflow/semifield.hpp"

namespace mutflow::testutil {

inline Polynomial random_positive_poly(std::mt19937_64& rng, int n_vars, int max_terms = 4,
                                       int max_exp = 3, int max_coeff = 9) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<int> coeff(1, max_coeff);
  Polynomial p(n_vars);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Exponents e(n_vars);
    for (auto& v : e) v = expd(rng);
    p.add_term(e, coeff(rng));
  }
  if (p.is_zero()) p.add_term(Exponents(n_vars, 0), 1);
  return p;
}

inline SemifieldElement random_element(std::mt19937_64& rng, int n_vars) {
  return {random_positive_poly(rng, n_vars), random_positive_poly(rng, n_vars)};
}

inline std::vector<double> random_positive_point(std::mt19937_64& rng, int n, double lo = 0.2,
                                                 double hi = 3.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> p(n);
  for (auto& v : p) v = dist(rng);
  return p;
}

// Random skew-symmetrizable matrix: random skew-symmetric integer part
// scaled through a random positive diagonal (d_i b_ij = -d_j b_ji by
// construction).
inline IntMatrix random_skew_symmetrizable(std::mt19937_64& rng, int n, int max_entry = 3,
                                           int max_d = 3) {
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::uniform_int_distribution<int> dd(1, max_d);
  std::vector<std::int64_t> d(n);
  for (auto& v : d) v = dd(rng);
  IntMatrix b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // d_i b_ij skew-symmetric by construction: b_ij = c d_j, b_ji = -c d_i
      const std::int64_t c = entry(rng);
      b.at(i, j) = c * d[j];
      b.at(j, i) = -c * d[i];
    }
  return b;
}

inline int random_index(std::mt19937_64& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

}  // namespace mutflow::testutil

#pragma once

#include <vector>

#include "mutflow/seed.hpp"

namespace mutflow {

// B[0..T], C[0..T] and the tropical sign sequence eps_0..eps_{T-1} along a
// mutation sequence. Column i of C[s] is the c-vector of y_i[s]; sign
// coherence (nonzero columns, one sign per column) is asserted throughout.
struct TropicalTrace {
  std::vector<IntMatrix> b;
  std::vector<IntMatrix> c;
  std::vector<Sign> signs;

  int steps() const { return static_cast<int>(signs.size()); }
};

// +1 if all entries >= 0, -1 if all <= 0; SignCoherenceViolation on a zero
// or mixed-sign column.
Sign tropical_sign(std::span<const Integer> column);

// Runs the tropicalized y-mutation recursion C[s+1] = mu_trop(C[s]) natively
// in Trop(y) (the exact Q_+(y) tropicalization is kept as a test oracle).
// Each step is computed with both eps and checked to agree.
TropicalTrace c_matrix_trace(const ExchangeMatrix& b, const std::vector<int>& seq);

// G[0] = I; G[s+1] changes column k_s to -g_k + sum_j [-eps_s b_{j k_s}[s]]_+ g_j.
// The signs must be the tropical sign sequence of (b, seq).
std::vector<IntMatrix> g_matrix_trace(const ExchangeMatrix& b, const std::vector<int>& seq,
                                      const std::vector<Sign>& signs);

std::vector<Sign> tropical_sign_sequence(const ExchangeMatrix& b, const std::vector<int>& seq);

}  // namespace mutflow

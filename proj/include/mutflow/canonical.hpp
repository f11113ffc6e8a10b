#pragma once

#include <utility>
#include <vector>

#include "mutflow/permutation.hpp"
#include "mutflow/seed.hpp"

namespace mutflow {

// Point of the phase space R^{2n} in canonical coordinates (u, p).
struct PhasePoint {
  std::vector<double> u, p;
  int rank() const { return static_cast<int>(u.size()); }
};

// Exchange matrix plus the fixed skew-symmetrizer used along a whole
// mutation sequence. D is taken once from the initial matrix and stays valid
// for every mutated matrix, which the constructor re-checks.
struct CanonicalContext {
  ExchangeMatrix b;
  std::vector<Integer> d;

  explicit CanonicalContext(ExchangeMatrix bb) : b(std::move(bb)), d(b.symmetrizer()) {}
  CanonicalContext(ExchangeMatrix bb, std::vector<Integer> dd)
      : b(std::move(bb)), d(std::move(dd)) {
    if (!is_valid_symmetrizer(b.matrix(), d))
      throw NotSkewSymmetrizable("D does not skew-symmetrize B");
  }
  int rank() const { return b.size(); }
};

// Log-canonical variables attached to a phase point:
//   w_i = sum_j b_ji u_j,  x_i = e^{2 u_i},  y_i = e^{d_i p_i + w_i},
//   yhat_i = e^{2 w_i}.
struct DerivedVars {
  std::vector<double> w, x, y, yhat;
};

// exp with a guard at |arg| > 700; throws OverflowError instead of
// returning Inf.
double guarded_exp(double arg);

DerivedVars derive(const CanonicalContext& ctx, const PhasePoint& pt);

// H = (eps / 2 d_k) Li2(-y_k^eps).
double hamiltonian(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt);

// Closed-form time-one Hamiltonian flow (the nontropical part on (u,p)):
//   u_i -> u_i - (1/2) delta_{ki} log(1 + y_k^eps)
//   p_i -> p_i - (1/(2 d_i)) b_ki log(1 + y_k^eps)
PhasePoint flow_time_one(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt);

// Fixed-step RK4 integration of the equations of motion, recomputing y_k
// from the current state at every stage. Serves as the independent check of
// flow_time_one; the flow is affine in t, so RK4 is exact up to roundoff.
PhasePoint flow_ode(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt,
                    double t_end, double step);

// The linear tropical coordinate change; returns the new point and the
// context with the mutated B (same D).
std::pair<PhasePoint, CanonicalContext> tau_canonical(const CanonicalContext& ctx, int k,
                                                      Sign eps, const PhasePoint& pt);

// Integer matrices (M, N) with u' = M u and p' = N p for the tropical
// transformation; N^T M = I.
std::pair<IntMatrix, IntMatrix> tau_matrices(const IntMatrix& b, int k, Sign eps);

// Signed mutation: tropical change after the time-one flow. The derived
// y-variables mutate as in the seed picture with P = R_+ for either sign;
// (u, p) themselves depend on the sign.
std::pair<PhasePoint, CanonicalContext> signed_mutation(const CanonicalContext& ctx, int k,
                                                        Sign eps, const PhasePoint& pt);

// Small phase space M0: d_i p_i - w_i = 0 for all i.
bool is_on_M0(const CanonicalContext& ctx, const PhasePoint& pt, double tol);
PhasePoint project_M0(const CanonicalContext& ctx, std::span<const double> u);

// Coordinate relabeling u'_i = u_{sigma^{-1}(i)}, same for p.
PhasePoint sigma_act(const Permutation& sigma, const PhasePoint& pt);

// y-mutation with P = R_+ in floating point; independent of eps.
std::vector<double> mutate_y_real(const IntMatrix& b, std::span<const double> y, int k, Sign eps);

}  // namespace mutflow

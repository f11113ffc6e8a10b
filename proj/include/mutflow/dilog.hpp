#pragma once

#include <vector>

#include "mutflow/canonical.hpp"

namespace mutflow {

struct DilogConfig {
  long series_cutoff = 10000;  // max terms of the defining series
  double quad_tol = 1e-13;     // target tolerance of quadrature cross-checks

  void validate() const {
    if (series_cutoff < 100) throw InvalidArgument("series cutoff must be >= 100");
    if (!(quad_tol > 0)) throw InvalidArgument("quad tolerance must be positive");
  }
};

// Euler dilogarithm Li2(x) = sum_{n>=1} x^n / n^2 for x <= 1.
// Series on |x| <= 1/2; reflection at 1-x, a Landen transform on [-1,-1/2)
// and the inversion formula below -1 move every other argument into the
// series region. Absolute error stays below ~1e-13.
double li2(double x);
double li2(double x, const DilogConfig& cfg);

// Rogers dilogarithm L(x) = Li2(x) + (1/2) log x log(1-x) on [0,1].
double rogers_L(double x);

// Ltilde(x) = L(x/(1+x)) = -Li2(-x) - (1/2) log x log(1+x) on [0, inf);
// increasing, with range [0, pi^2/6).
double rogers_Ltilde(double x);

// Legendre transform of the Hamiltonian as a function of (u,p):
//   L = -(1/2) log(1 + y_k^eps) p_k - (eps / 2 d_k) Li2(-y_k^eps).
double lagrangian_general(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt);

// On M0 the Lagrangian collapses to (eps / 2 d_k) Ltilde(y_k^eps); throws
// NotOnM0 if the point is off M0 beyond tol.
double lagrangian_on_M0(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt,
                        double tol = 1e-9);

// Action integral along the piecewise Hamiltonian flow of a signed-mutation
// sequence: the Lagrangian is constant on each time span, so S is the plain
// sum of span values. signs must be the tropical sign sequence.
double action_integral(const ExchangeMatrix& b, const std::vector<int>& seq,
                       const std::vector<Sign>& signs, const PhasePoint& pt0);

// Same quantity by composite-Simpson quadrature of the Lagrangian along the
// RK4 flow; cross-check for the constancy shortcut. panels must be even.
double action_integral_quadrature(const ExchangeMatrix& b, const std::vector<int>& seq,
                                  const std::vector<Sign>& signs, const PhasePoint& pt0,
                                  int panels = 16);

// sum_s (eps_s / d_{k_s}) Ltilde(y_{k_s}^{eps_s}[s]) with the y-variables
// mutated in R_+ from y0 and eps_s the tropical sign sequence (computed
// internally, never user-supplied). Vanishes on sigma-periodic sequences.
double identity_residual(const ExchangeMatrix& b, const std::vector<int>& seq,
                         std::span<const double> y0);

// The yhat variant: the same sum with yhat_{k_s}[s] = e^{2 w_{k_s}[s]} read
// off a signed-mutation trace started at the M0 projection of u0.
double identity_residual_yhat(const ExchangeMatrix& b, const std::vector<int>& seq,
                              std::span<const double> u0);

}  // namespace mutflow

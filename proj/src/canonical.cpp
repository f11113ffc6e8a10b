#include "mutflow/canonical.hpp"

#include <cmath>

#include "mutflow/dilog.hpp"

namespace mutflow {

double guarded_exp(double arg) {
  if (!std::isfinite(arg) || std::abs(arg) > 700.0)
    throw OverflowError("exponent magnitude exceeds guard (700)");
  return std::exp(arg);
}

namespace {

std::vector<double> w_of(const CanonicalContext& ctx, const PhasePoint& pt) {
  const int n = ctx.rank();
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i] += to_double(ctx.b.at(j, i)) * pt.u[j];
  return w;
}

void check_rank(const CanonicalContext& ctx, const PhasePoint& pt, int k) {
  if (pt.rank() != ctx.rank() || static_cast<int>(pt.p.size()) != ctx.rank())
    throw DimensionMismatch("phase point rank");
  if (k < 0 || k >= ctx.rank()) throw InvalidArgument("mutation direction out of range");
}

// eps * (d_k p_k + w_k), the log of y_k^eps.
double log_yk_eps(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt) {
  double wk = 0.0;
  for (int j = 0; j < ctx.rank(); ++j) wk += to_double(ctx.b.at(j, k)) * pt.u[j];
  return sign_value(eps) * (to_double(ctx.d[k]) * pt.p[k] + wk);
}

}  // namespace

DerivedVars derive(const CanonicalContext& ctx, const PhasePoint& pt) {
  if (pt.rank() != ctx.rank() || static_cast<int>(pt.p.size()) != ctx.rank())
    throw DimensionMismatch("phase point rank");
  const int n = ctx.rank();
  DerivedVars v;
  v.w = w_of(ctx, pt);
  v.x.resize(n);
  v.y.resize(n);
  v.yhat.resize(n);
  for (int i = 0; i < n; ++i) {
    v.x[i] = guarded_exp(2.0 * pt.u[i]);
    v.y[i] = guarded_exp(to_double(ctx.d[i]) * pt.p[i] + v.w[i]);
    v.yhat[i] = guarded_exp(2.0 * v.w[i]);
  }
  return v;
}

double hamiltonian(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt) {
  check_rank(ctx, pt, k);
  const double yk_eps = guarded_exp(log_yk_eps(ctx, k, eps, pt));
  return sign_value(eps) / (2.0 * to_double(ctx.d[k])) * li2(-yk_eps);
}

PhasePoint flow_time_one(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt) {
  check_rank(ctx, pt, k);
  const int n = ctx.rank();
  const double L = std::log1p(guarded_exp(log_yk_eps(ctx, k, eps, pt)));
  PhasePoint out = pt;
  out.u[k] -= 0.5 * L;
  for (int i = 0; i < n; ++i)
    out.p[i] -= to_double(ctx.b.at(k, i)) / (2.0 * to_double(ctx.d[i])) * L;
  return out;
}

PhasePoint flow_ode(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt,
                    double t_end, double step) {
  check_rank(ctx, pt, k);
  if (!(step > 0.0)) throw InvalidArgument("step must be positive");
  const int n = ctx.rank();

  // du/dt and dp/dt at the given state; y_k recomputed every call.
  auto deriv = [&](const PhasePoint& s, std::vector<double>& du, std::vector<double>& dp) {
    const double L = std::log1p(guarded_exp(log_yk_eps(ctx, k, eps, s)));
    for (int i = 0; i < n; ++i) {
      du[i] = i == k ? -0.5 * L : 0.0;
      dp[i] = -to_double(ctx.b.at(k, i)) / (2.0 * to_double(ctx.d[i])) * L;
    }
  };

  PhasePoint s = pt;
  std::vector<double> ku1(n), kp1(n), ku2(n), kp2(n), ku3(n), kp3(n), ku4(n), kp4(n);
  double t = 0.0;
  while (t < t_end - 1e-15) {
    const double h = std::min(step, t_end - t);
    PhasePoint tmp = s;
    deriv(s, ku1, kp1);
    for (int i = 0; i < n; ++i) {
      tmp.u[i] = s.u[i] + 0.5 * h * ku1[i];
      tmp.p[i] = s.p[i] + 0.5 * h * kp1[i];
    }
    deriv(tmp, ku2, kp2);
    for (int i = 0; i < n; ++i) {
      tmp.u[i] = s.u[i] + 0.5 * h * ku2[i];
      tmp.p[i] = s.p[i] + 0.5 * h * kp2[i];
    }
    deriv(tmp, ku3, kp3);
    for (int i = 0; i < n; ++i) {
      tmp.u[i] = s.u[i] + h * ku3[i];
      tmp.p[i] = s.p[i] + h * kp3[i];
    }
    deriv(tmp, ku4, kp4);
    for (int i = 0; i < n; ++i) {
      s.u[i] += h / 6.0 * (ku1[i] + 2.0 * ku2[i] + 2.0 * ku3[i] + ku4[i]);
      s.p[i] += h / 6.0 * (kp1[i] + 2.0 * kp2[i] + 2.0 * kp3[i] + kp4[i]);
    }
    t += h;
  }
  return s;
}

std::pair<IntMatrix, IntMatrix> tau_matrices(const IntMatrix& b, int k, Sign eps) {
  const int n = b.size();
  const int e = sign_value(eps);
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix nn = IntMatrix::identity(n);
  m.at(k, k) = -1;
  nn.at(k, k) = -1;
  for (int j = 0; j < n; ++j) {
    if (j == k) continue;
    m.at(k, j) = pos_part(-e * b.at(j, k));
    nn.at(j, k) = pos_part(-e * b.at(j, k));
  }
  return {m, nn};
}

std::pair<PhasePoint, CanonicalContext> tau_canonical(const CanonicalContext& ctx, int k,
                                                      Sign eps, const PhasePoint& pt) {
  check_rank(ctx, pt, k);
  const int n = ctx.rank();
  const int e = sign_value(eps);
  PhasePoint out = pt;
  double uk = -pt.u[k];
  for (int j = 0; j < n; ++j) uk += to_double(pos_part(-e * ctx.b.at(j, k))) * pt.u[j];
  out.u[k] = uk;
  out.p[k] = -pt.p[k];
  for (int i = 0; i < n; ++i)
    if (i != k) out.p[i] = pt.p[i] + to_double(pos_part(-e * ctx.b.at(i, k))) * pt.p[k];
  return {out, CanonicalContext(mutate_matrix(ctx.b, k, eps), ctx.d)};
}

std::pair<PhasePoint, CanonicalContext> signed_mutation(const CanonicalContext& ctx, int k,
                                                        Sign eps, const PhasePoint& pt) {
  return tau_canonical(ctx, k, eps, flow_time_one(ctx, k, eps, pt));
}

bool is_on_M0(const CanonicalContext& ctx, const PhasePoint& pt, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const auto w = w_of(ctx, pt);
  for (int i = 0; i < ctx.rank(); ++i)
    if (std::abs(to_double(ctx.d[i]) * pt.p[i] - w[i]) > tol) return false;
  return true;
}

PhasePoint project_M0(const CanonicalContext& ctx, std::span<const double> u) {
  if (static_cast<int>(u.size()) != ctx.rank()) throw DimensionMismatch("u length");
  PhasePoint pt{std::vector<double>(u.begin(), u.end()), std::vector<double>(ctx.rank())};
  const auto w = w_of(ctx, pt);
  for (int i = 0; i < ctx.rank(); ++i) pt.p[i] = w[i] / to_double(ctx.d[i]);
  return pt;
}

PhasePoint sigma_act(const Permutation& sigma, const PhasePoint& pt) {
  return {sigma.apply(pt.u), sigma.apply(pt.p)};
}

std::vector<double> mutate_y_real(const IntMatrix& b, std::span<const double> y, int k, Sign eps) {
  const int n = b.size();
  if (static_cast<int>(y.size()) != n) throw DimensionMismatch("y length");
  if (k < 0 || k >= n) throw InvalidArgument("mutation direction out of range");
  const int e = sign_value(eps);
  for (double v : y)
    if (!(v > 0.0)) throw DomainError("y must be strictly positive");
  std::vector<double> out(n);
  const double yk_eps = e == 1 ? y[k] : 1.0 / y[k];
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      out[i] = 1.0 / y[k];
    } else {
      out[i] = y[i] * std::pow(y[k], to_double(pos_part(e * b.at(k, i)))) *
               std::pow(1.0 + yk_eps, -to_double(b.at(k, i)));
    }
    if (!std::isfinite(out[i])) throw OverflowError("y-mutation overflow");
  }
  return out;
}

}  // namespace mutflow

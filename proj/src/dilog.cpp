#include "mutflow/dilog.hpp"

#include <cmath>
#include <numbers>

#include "mutflow/tropical.hpp"

namespace mutflow {

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Defining series; caller guarantees |x| <= 1/2, where ~50 terms suffice.
double li2_series(double x, long cutoff) {
  double term = x, acc = x;
  for (long n = 2; n <= cutoff; ++n) {
    term *= x;
    const double add = term / (static_cast<double>(n) * n);
    acc += add;
    if (std::abs(add) < 1e-18 * std::abs(acc) + 1e-300) return acc;
  }
  return acc;
}

}  // namespace

double li2(double x, const DilogConfig& cfg) {
  cfg.validate();
  if (!(x <= 1.0)) throw DomainError("li2 requires x <= 1");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi2Over6;
  if (std::abs(x) <= 0.5) return li2_series(x, cfg.series_cutoff);
  if (x > 0.5) {
    // Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
    return kPi2Over6 - std::log(x) * std::log1p(-x) - li2_series(1.0 - x, cfg.series_cutoff);
  }
  if (x >= -1.0) {
    // Landen: Li2(x) + Li2(x/(x-1)) = -(1/2) log^2(1-x); x/(x-1) in (1/3, 1/2]
    const double z = x / (x - 1.0);
    const double l = std::log1p(-x);
    return -0.5 * l * l - li2_series(z, cfg.series_cutoff);
  }
  // x < -1, inversion: Li2(x) = -pi^2/6 - (1/2) log^2(-x) - Li2(1/x)
  const double l = std::log(-x);
  return -kPi2Over6 - 0.5 * l * l - li2(1.0 / x, cfg);
}

double li2(double x) { return li2(x, DilogConfig{}); }

double rogers_L(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("rogers_L requires x in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi2Over6;
  return li2(x) + 0.5 * std::log(x) * std::log1p(-x);
}

double rogers_Ltilde(double x) {
  if (!(x >= 0.0)) throw DomainError("rogers_Ltilde requires x >= 0");
  if (x == 0.0) return 0.0;  // log x log(1+x) -> 0
  return -li2(-x) - 0.5 * std::log(x) * std::log1p(x);
}

double lagrangian_general(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt) {
  const auto v = derive(ctx, pt);
  const double yk_eps = sign_value(eps) == 1 ? v.y[k] : 1.0 / v.y[k];
  return -0.5 * std::log1p(yk_eps) * pt.p[k] -
         sign_value(eps) / (2.0 * to_double(ctx.d[k])) * li2(-yk_eps);
}

double lagrangian_on_M0(const CanonicalContext& ctx, int k, Sign eps, const PhasePoint& pt,
                        double tol) {
  if (!is_on_M0(ctx, pt, tol)) throw NotOnM0("point is off the small phase space");
  const auto v = derive(ctx, pt);
  const double yk_eps = sign_value(eps) == 1 ? v.y[k] : 1.0 / v.y[k];
  return sign_value(eps) / (2.0 * to_double(ctx.d[k])) * rogers_Ltilde(yk_eps);
}

double action_integral(const ExchangeMatrix& b, const std::vector<int>& seq,
                       const std::vector<Sign>& signs, const PhasePoint& pt0) {
  if (signs.size() != seq.size()) throw DimensionMismatch("sign sequence length");
  CanonicalContext ctx(b);
  PhasePoint pt = pt0;
  double s = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    s += lagrangian_general(ctx, seq[i], signs[i], pt);
    std::tie(pt, ctx) = signed_mutation(ctx, seq[i], signs[i], pt);
  }
  return s;
}

double action_integral_quadrature(const ExchangeMatrix& b, const std::vector<int>& seq,
                                  const std::vector<Sign>& signs, const PhasePoint& pt0,
                                  int panels) {
  if (signs.size() != seq.size()) throw DimensionMismatch("sign sequence length");
  if (panels < 2 || panels % 2 != 0) throw InvalidArgument("panels must be an even count >= 2");
  CanonicalContext ctx(b);
  PhasePoint pt = pt0;
  double s = 0.0;
  const double h = 1.0 / panels;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    // Simpson over the unit time span, walking the ODE flow node to node.
    PhasePoint node = pt;
    double acc = lagrangian_general(ctx, seq[i], signs[i], node);
    for (int j = 1; j <= panels; ++j) {
      node = flow_ode(ctx, seq[i], signs[i], node, h, h / 8.0);
      const double w = j == panels ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      acc += w * lagrangian_general(ctx, seq[i], signs[i], node);
    }
    s += acc * h / 3.0;
    std::tie(pt, ctx) = tau_canonical(ctx, seq[i], signs[i], node);
  }
  return s;
}

double identity_residual(const ExchangeMatrix& b, const std::vector<int>& seq,
                         std::span<const double> y0) {
  if (static_cast<int>(y0.size()) != b.size()) throw DimensionMismatch("y0 length");
  const auto signs = tropical_sign_sequence(b, seq);
  const auto& d = b.symmetrizer();
  std::vector<double> y(y0.begin(), y0.end());
  ExchangeMatrix cur = b;
  double acc = 0.0;
  for (std::size_t s = 0; s < seq.size(); ++s) {
    const int k = seq[s];
    const int e = sign_value(signs[s]);
    const double yk_eps = e == 1 ? y[k] : 1.0 / y[k];
    acc += e / to_double(d[k]) * rogers_Ltilde(yk_eps);
    y = mutate_y_real(cur.matrix(), y, k, signs[s]);
    cur = mutate_matrix(cur, k);
  }
  return acc;
}

double identity_residual_yhat(const ExchangeMatrix& b, const std::vector<int>& seq,
                              std::span<const double> u0) {
  const auto signs = tropical_sign_sequence(b, seq);
  CanonicalContext ctx(b);
  PhasePoint pt = project_M0(ctx, u0);
  double acc = 0.0;
  for (std::size_t s = 0; s < seq.size(); ++s) {
    const int k = seq[s];
    const int e = sign_value(signs[s]);
    const auto v = derive(ctx, pt);
    const double yhat_eps = e == 1 ? v.yhat[k] : 1.0 / v.yhat[k];
    acc += e / to_double(ctx.d[k]) * rogers_Ltilde(yhat_eps);
    std::tie(pt, ctx) = signed_mutation(ctx, k, signs[s], pt);
  }
  return acc;
}

}  // namespace mutflow

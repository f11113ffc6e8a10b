#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mutflow/canonical.hpp"
#include "mutflow/dilog.hpp"
#include "test_util.hpp"

using namespace mutflow;
using namespace mutflow::testutil;

namespace {

CanonicalContext a2_ctx() { return CanonicalContext(ExchangeMatrix(IntMatrix(2, {0, 1, -1, 0}))); }

PhasePoint random_point(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  PhasePoint pt{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    pt.u[i] = dist(rng);
    pt.p[i] = dist(rng);
  }
  return pt;
}

double max_diff(const PhasePoint& a, const PhasePoint& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    m = std::max(m, std::abs(a.u[i] - b.u[i]));
    m = std::max(m, std::abs(a.p[i] - b.p[i]));
  }
  return m;
}

// trivial-coefficient x-mutation evaluated in floats
std::vector<double> mutate_x_real(const IntMatrix& b, const std::vector<double>& x, int k,
                                  Sign eps) {
  const int n = b.size();
  const int e = sign_value(eps);
  double yhat_k = 1.0;
  for (int j = 0; j < n; ++j) yhat_k *= std::pow(x[j], to_double(b.at(j, k)));
  std::vector<double> out = x;
  double v = 1.0 / x[k];
  for (int j = 0; j < n; ++j) v *= std::pow(x[j], to_double(pos_part(-e * b.at(j, k))));
  out[k] = v * (1.0 + std::pow(yhat_k, e));
  return out;
}

}  // namespace

TEST_CASE("derive examples") {
  CanonicalContext ctx = a2_ctx();
  DerivedVars v = derive(ctx, PhasePoint{{0.0, 0.0}, {0.0, 0.0}});
  CHECK(v.x == std::vector<double>{1.0, 1.0});
  CHECK(v.y == std::vector<double>{1.0, 1.0});
  CHECK(v.yhat == std::vector<double>{1.0, 1.0});

  // u = (1,0), p = 0: w = (0,1), y = (1, e)
  DerivedVars w = derive(ctx, PhasePoint{{1.0, 0.0}, {0.0, 0.0}});
  CHECK(w.w == std::vector<double>{0.0, 1.0});
  CHECK(w.y[0] == doctest::Approx(1.0));
  CHECK(w.y[1] == doctest::Approx(std::numbers::e));

  // on M0, y = yhat
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto pt = project_M0(ctx, random_point(rng, 2).u);
    auto d = derive(ctx, pt);
    for (int i = 0; i < 2; ++i) CHECK(d.y[i] == doctest::Approx(d.yhat[i]).epsilon(1e-12));
  }
}

TEST_CASE("overflow guard") {
  CanonicalContext ctx = a2_ctx();
  CHECK_THROWS_AS(derive(ctx, PhasePoint{{400.0, 0.0}, {0.0, 0.0}}), OverflowError);
  CHECK_THROWS_AS(guarded_exp(701.0), OverflowError);
  CHECK(guarded_exp(0.0) == 1.0);
}

TEST_CASE("hamiltonian values") {
  CanonicalContext ctx = a2_ctx();
  // y_1 -> 0: H -> 0
  CHECK(std::abs(hamiltonian(ctx, 0, Sign::plus, PhasePoint{{0, 0}, {-650, 0}})) < 1e-200);
  // y_1 = 1, d = 1: H = Li2(-1)/2 = -pi^2/24
  CHECK(hamiltonian(ctx, 0, Sign::plus, PhasePoint{{0, 0}, {0, 0}}) ==
        doctest::Approx(-std::numbers::pi * std::numbers::pi / 24.0));
}

TEST_CASE("time-one flow closed form") {
  CanonicalContext ctx = a2_ctx();
  PhasePoint pt{{0.0, 0.0}, {0.0, 0.0}};
  PhasePoint f = flow_time_one(ctx, 0, Sign::plus, pt);
  const double half_log2 = 0.5 * std::log(2.0);
  CHECK(f.u[0] == doctest::Approx(-half_log2));
  CHECK(f.u[1] == 0.0);
  CHECK(f.p[0] == 0.0);
  CHECK(f.p[1] == doctest::Approx(-half_log2));

  // zero row b_k. leaves p unchanged
  CanonicalContext z(ExchangeMatrix(IntMatrix(2, {0, 0, 0, 0})));
  PhasePoint g = flow_time_one(z, 0, Sign::plus, PhasePoint{{0.3, 0.4}, {0.5, 0.6}});
  CHECK(g.p[0] == 0.5);
  CHECK(g.p[1] == 0.6);
  CHECK(g.u[1] == 0.4);
}

TEST_CASE("closed form flow matches RK4 oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + random_index(rng, 3);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    const Sign eps = rng() % 2 ? Sign::plus : Sign::minus;
    PhasePoint pt = random_point(rng, n);
    PhasePoint closed = flow_time_one(ctx, k, eps, pt);
    PhasePoint ode = flow_ode(ctx, k, eps, pt, 1.0, 1e-3);
    CHECK(max_diff(closed, ode) < 1e-8);
  }
}

TEST_CASE("flow conservation and linearity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + random_index(rng, 2);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    const Sign eps = rng() % 2 ? Sign::plus : Sign::minus;
    PhasePoint pt = random_point(rng, n);

    const double h0 = hamiltonian(ctx, k, eps, pt);
    const double yk0 = derive(ctx, pt).y[k];
    PhasePoint mid = flow_ode(ctx, k, eps, pt, 0.5, 1e-3);
    PhasePoint end = flow_ode(ctx, k, eps, pt, 1.0, 1e-3);

    // conserved: H, y_k, u_i (i != k), p_k
    CHECK(std::abs(hamiltonian(ctx, k, eps, end) - h0) < 1e-10);
    CHECK(std::abs(derive(ctx, end).y[k] - yk0) < 1e-10 * std::max(1.0, yk0));
    for (int i = 0; i < n; ++i)
      if (i != k) CHECK(std::abs(end.u[i] - pt.u[i]) < 1e-10);
    CHECK(std::abs(end.p[k] - pt.p[k]) < 1e-10);

    // linear in t: midpoint is the average of the endpoints
    CHECK(std::abs(mid.u[k] - 0.5 * (pt.u[k] + end.u[k])) < 1e-10);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(mid.p[i] - 0.5 * (pt.p[i] + end.p[i])) < 1e-10);

    // t_end = 0 is the identity
    CHECK(max_diff(flow_ode(ctx, k, eps, pt, 0.0, 1e-3), pt) == 0.0);
  }
}

TEST_CASE("tau is canonical and matches the tropical part") {
  std::mt19937_64 rng(13);
  // column k all zero: u'_k = -u_k, p'_k = -p_k, rest unchanged
  CanonicalContext z(ExchangeMatrix(IntMatrix(2, {0, 0, 0, 0})));
  PhasePoint pt0{{0.3, 0.4}, {0.5, 0.6}};
  auto [zp, zctx] = tau_canonical(z, 0, Sign::plus, pt0);
  CHECK(zp.u == std::vector<double>{-0.3, 0.4});
  CHECK(zp.p == std::vector<double>{-0.5, 0.6});

  for (int t = 0; t < 100; ++t) {
    const int n = 2 + random_index(rng, 3);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    const Sign eps = rng() % 2 ? Sign::plus : Sign::minus;

    // N^T M = I exactly
    auto [m, nn] = tau_matrices(b.matrix(), k, eps);
    CHECK(nn.transposed() * m == IntMatrix::identity(n));

    PhasePoint pt = random_point(rng, n);
    auto [out, nctx] = tau_canonical(ctx, k, eps, pt);

    // sum u'_i p'_i invariant
    double s0 = 0.0, s1 = 0.0;
    for (int i = 0; i < n; ++i) {
      s0 += pt.u[i] * pt.p[i];
      s1 += out.u[i] * out.p[i];
    }
    CHECK(s1 == doctest::Approx(s0).epsilon(1e-12));

    // derived variables transform by the tropical part of the mutation
    auto dv = derive(ctx, pt);
    auto dn = derive(nctx, out);
    const int e = sign_value(eps);
    double xk = 1.0 / dv.x[k];
    for (int j = 0; j < n; ++j)
      xk *= std::pow(dv.x[j], to_double(pos_part(-e * b.at(j, k))));
    CHECK(dn.x[k] == doctest::Approx(xk).epsilon(1e-10));
    CHECK(dn.y[k] == doctest::Approx(1.0 / dv.y[k]).epsilon(1e-10));
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      CHECK(dn.x[i] == doctest::Approx(dv.x[i]).epsilon(1e-12));
      const double yi = dv.y[i] * std::pow(dv.y[k], to_double(pos_part(e * b.at(k, i))));
      CHECK(dn.y[i] == doctest::Approx(yi).epsilon(1e-10));
    }

    // M0 is preserved in the new chart
    PhasePoint m0 = project_M0(ctx, pt.u);
    auto [m0out, m0ctx] = tau_canonical(ctx, k, eps, m0);
    CHECK(is_on_M0(m0ctx, m0out, 1e-10));
  }
}

TEST_CASE("flow preserves M0") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + random_index(rng, 2);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    PhasePoint pt = project_M0(ctx, random_point(rng, n).u);
    CHECK(is_on_M0(ctx, pt, 1e-12));
    PhasePoint f = flow_time_one(ctx, k, Sign::plus, pt);
    CHECK(is_on_M0(ctx, f, 1e-10));
  }
}

TEST_CASE("signed mutation realizes the y- and x-mutations") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + random_index(rng, 3);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    const Sign eps = rng() % 2 ? Sign::plus : Sign::minus;

    // derived y' equals the y-mutation with P = R_+, from any point
    PhasePoint pt = random_point(rng, n);
    auto [out, nctx] = signed_mutation(ctx, k, eps, pt);
    auto expect_y = mutate_y_real(b.matrix(), derive(ctx, pt).y, k, eps);
    auto got = derive(nctx, out);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(got.y[i] - expect_y[i]) <= 1e-10 * expect_y[i]);

    // on M0 the derived x' equals the trivial-coefficient x-mutation
    PhasePoint m0 = project_M0(ctx, pt.u);
    auto [mout, mctx] = signed_mutation(ctx, k, eps, m0);
    auto expect_x = mutate_x_real(b.matrix(), derive(ctx, m0).x, k, eps);
    auto gotm = derive(mctx, mout);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(gotm.x[i] - expect_x[i]) <= 1e-10 * expect_x[i]);
  }
}

TEST_CASE("x-mutation mismatch off M0 is detected") {
  CanonicalContext ctx = a2_ctx();
  // d_k p_k != w_k at k = 0 makes y_k != yhat_k and the x update differ
  PhasePoint off{{0.4, -0.3}, {0.9, 0.2}};
  REQUIRE(!is_on_M0(ctx, off, 1e-3));
  auto [out, nctx] = signed_mutation(ctx, 0, Sign::plus, off);
  auto expect_x = mutate_x_real(ctx.b.matrix(), derive(ctx, off).x, 0, Sign::plus);
  const double got = derive(nctx, out).x[0];
  CHECK(std::abs(got - expect_x[0]) > 1e-6 * expect_x[0]);
}

TEST_CASE("signed mutation inversion relation") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + random_index(rng, 3);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    const Sign eps = rng() % 2 ? Sign::plus : Sign::minus;
    PhasePoint pt = random_point(rng, n);
    auto [mid, mctx] = signed_mutation(ctx, k, eps, pt);
    auto [back, bctx] = signed_mutation(mctx, k, flip(eps), mid);
    CHECK(max_diff(back, pt) < 1e-10);
    CHECK(bctx.b.matrix() == b.matrix());
  }
}

TEST_CASE("signed mutation depends on the sign only through (u,p)") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + random_index(rng, 2);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    CanonicalContext ctx(b);
    const int k = random_index(rng, n);
    PhasePoint pt = random_point(rng, n);
    auto [out_p, ctx_p] = signed_mutation(ctx, k, Sign::plus, pt);
    auto [out_m, ctx_m] = signed_mutation(ctx, k, Sign::minus, pt);
    auto yp = derive(ctx_p, out_p).y;
    auto ym = derive(ctx_m, out_m).y;
    for (int i = 0; i < n; ++i) CHECK(std::abs(yp[i] - ym[i]) <= 1e-10 * yp[i]);

    PhasePoint m0 = project_M0(ctx, pt.u);
    auto [mp, mpc] = signed_mutation(ctx, k, Sign::plus, m0);
    auto [mm, mmc] = signed_mutation(ctx, k, Sign::minus, m0);
    auto xp = derive(mpc, mp).x;
    auto xm = derive(mmc, mm).x;
    for (int i = 0; i < n; ++i) CHECK(std::abs(xp[i] - xm[i]) <= 1e-10 * xp[i]);
  }
}

TEST_CASE("sigma action") {
  std::mt19937_64 rng(31);
  Permutation sigma(std::vector<int>{1, 2, 0});
  PhasePoint pt = random_point(rng, 3);
  CHECK(max_diff(sigma_act(Permutation(3), pt), pt) == 0.0);
  PhasePoint fwd = sigma_act(sigma, pt);
  CHECK(max_diff(sigma_act(sigma.inverse(), fwd), pt) == 0.0);
  // u'_i = u_{sigma^{-1}(i)}
  CHECK(fwd.u[sigma(0)] == pt.u[0]);
  double s0 = 0.0, s1 = 0.0;
  for (int i = 0; i < 3; ++i) {
    s0 += pt.u[i] * pt.p[i];
    s1 += fwd.u[i] * fwd.p[i];
  }
  CHECK(s1 == doctest::Approx(s0));
  CHECK_THROWS_AS(sigma_act(Permutation(2), pt), DimensionMismatch);
}

TEST_CASE("mutate_y_real is sign independent") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + random_index(rng, 3);
    ExchangeMatrix b(random_skew_symmetrizable(rng, n, 2, 2));
    auto y = random_positive_point(rng, n, 0.1, 8.0);
    auto yp = mutate_y_real(b.matrix(), y, 0, Sign::plus);
    auto ym = mutate_y_real(b.matrix(), y, 0, Sign::minus);
    for (int i = 0; i < n; ++i) CHECK(yp[i] == doctest::Approx(ym[i]).epsilon(1e-12));
  }
}

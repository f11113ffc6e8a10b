#include "mutflow/periodicity.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mutflow/dirac.hpp"

namespace mutflow {

MutationPlan::MutationPlan(ExchangeMatrix bb, std::vector<int> s, std::optional<Permutation> sg)
    : b(std::move(bb)), seq(std::move(s)), sigma(std::move(sg)) {
  for (int k : seq)
    if (k < 0 || k >= b.size()) throw InvalidArgument("mutation index out of range");
  if (sigma && sigma->size() != b.size()) throw InvalidArgument("sigma size mismatch");
}

namespace {

Permutation plan_sigma(const MutationPlan& plan) {
  if (plan.sigma) return *plan.sigma;
  return Permutation(plan.b.size());
}

bool b_matrix_periodic(const IntMatrix& b0, const IntMatrix& bt, const Permutation& sigma) {
  const Permutation inv = sigma.inverse();
  for (int i = 0; i < b0.size(); ++i)
    for (int j = 0; j < b0.size(); ++j)
      if (bt.at(inv(i), inv(j)) != b0.at(i, j)) return false;
  return true;
}

}  // namespace

bool check_seed_periodicity(const MutationPlan& plan, const ResourceLimits& limits) {
  const int n = plan.b.size();
  const int t = static_cast<int>(plan.seq.size());
  if (n > limits.max_symbolic_rank)
    throw ResourceLimitError("rank exceeds symbolic limit");
  if (t > limits.max_symbolic_length)
    throw ResourceLimitError("sequence length exceeds symbolic limit");
  const Permutation sigma = plan_sigma(plan);
  const Permutation inv = sigma.inverse();

  // B-condition, integers only.
  ExchangeMatrix bt = plan.b;
  for (int k : plan.seq) bt = mutate_matrix(bt, k);
  if (!b_matrix_periodic(plan.b.matrix(), bt.matrix(), sigma)) return false;

  // y-condition over Q_+(y).
  std::vector<SemifieldElement> y;
  for (int i = 0; i < n; ++i) y.push_back(SemifieldElement::generator(n, i));
  ExchangeMatrix cur = plan.b;
  for (int k : plan.seq) {
    y = mutate_y_symbolic(cur, y, k, Sign::plus);
    cur = mutate_matrix(cur, k);
  }
  for (int i = 0; i < n; ++i)
    if (!sf_eq(y[inv(i)], SemifieldElement::generator(n, i))) return false;

  // x-condition in the ambient field.
  Seed seed = Seed::initial(plan.b, SemifieldKind::Universal);
  for (int k : plan.seq) seed = mutate_seed(seed, k);
  for (int i = 0; i < n; ++i)
    if (!sf_eq(seed.x[inv(i)], SemifieldElement::generator(2 * n, i))) return false;
  return true;
}

bool check_tropical_periodicity(const MutationPlan& plan) {
  const Permutation sigma = plan_sigma(plan);
  const IntMatrix s = sigma.matrix();
  const TropicalTrace trace = c_matrix_trace(plan.b, plan.seq);
  if (!(trace.c.back() == s)) return false;
  const auto g = g_matrix_trace(plan.b, plan.seq, trace.signs);
  return g.back() == s;
}

bool check_signed_periodicity(const MutationPlan& plan, int samples, std::uint64_t rng_seed,
                              double tol) {
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  const int n = plan.b.size();
  const Permutation sigma = plan_sigma(plan);

  // Exact B-periodicity first.
  ExchangeMatrix bt = plan.b;
  for (int k : plan.seq) bt = mutate_matrix(bt, k);
  if (!b_matrix_periodic(plan.b.matrix(), bt.matrix(), sigma)) return false;

  const auto signs = tropical_sign_sequence(plan.b, plan.seq);
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    PhasePoint pt{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < n; ++i) {
      pt.u[i] = dist(rng);
      pt.p[i] = dist(rng);
    }
    const PhasePoint start = pt;
    CanonicalContext ctx(plan.b);
    for (std::size_t i = 0; i < plan.seq.size(); ++i)
      std::tie(pt, ctx) = signed_mutation(ctx, plan.seq[i], signs[i], pt);
    const PhasePoint back = sigma_act(sigma, pt);
    for (int i = 0; i < n; ++i)
      if (std::abs(back.u[i] - start.u[i]) > tol || std::abs(back.p[i] - start.p[i]) > tol)
        return false;
  }
  return true;
}

bool check_canonical_tropical_periodicity(const MutationPlan& plan) {
  const int n = plan.b.size();
  const Permutation sigma = plan_sigma(plan);
  const TropicalTrace trace = c_matrix_trace(plan.b, plan.seq);
  IntMatrix mu = IntMatrix::identity(n);
  IntMatrix np = IntMatrix::identity(n);
  for (std::size_t s = 0; s < plan.seq.size(); ++s) {
    const auto [m, nn] = tau_matrices(trace.b[s], plan.seq[s], trace.signs[s]);
    mu = m * mu;
    np = nn * np;
  }
  const IntMatrix smat = sigma.matrix();
  const IntMatrix id = IntMatrix::identity(n);
  return smat * mu == id && smat * np == id;
}

std::optional<Permutation> find_sigma(const ExchangeMatrix& b, const std::vector<int>& seq) {
  const int n = b.size();
  const TropicalTrace trace = c_matrix_trace(b, seq);
  const IntMatrix& ct = trace.c.back();
  std::vector<int> image(n, -1);
  for (int j = 0; j < n; ++j) {
    int row = -1;
    for (int i = 0; i < n; ++i) {
      if (ct.at(i, j) == 0) continue;
      if (ct.at(i, j) != 1 || row != -1) return std::nullopt;
      row = i;
    }
    if (row < 0) return std::nullopt;
    image[j] = row;
  }
  std::vector<char> seen(n, 0);
  for (int v : image) {
    if (seen[v]) return std::nullopt;
    seen[v] = 1;
  }
  Permutation sigma{std::vector<int>(image)};
  const auto g = g_matrix_trace(b, seq, trace.signs);
  if (!(g.back() == sigma.matrix())) return std::nullopt;
  return sigma;
}

ExchangeMatrix invertible_extension(const ExchangeMatrix& b) {
  const int n = b.size();
  const auto& d = b.symmetrizer();
  IntMatrix ext(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ext.at(i, j) = b.at(i, j);
    ext.at(i, n + i) = -1;
    ext.at(n + i, i) = d[i];
  }
  ExchangeMatrix result{std::move(ext)};
  if (rational_determinant(result.matrix()) == 0)
    throw InvariantViolation("invertible extension is singular");
  return result;
}

PeriodicityReport check_all(const MutationPlan& plan, int samples, std::uint64_t rng_seed,
                            const ResourceLimits& limits) {
  PeriodicityReport report;
  MutationPlan resolved = plan;
  if (!resolved.sigma) {
    auto found = find_sigma(plan.b, plan.seq);
    if (found) {
      resolved.sigma = *found;
    } else {
      resolved.sigma = Permutation(plan.b.size());
      report.sigma_found = false;
    }
  }
  report.sigma = *resolved.sigma;
  report.signs = tropical_sign_sequence(plan.b, plan.seq);

  report.seed_periodic = check_seed_periodicity(resolved, limits);
  report.tropical_periodic = check_tropical_periodicity(resolved);
  report.signed_periodic = check_signed_periodicity(resolved, samples, rng_seed);
  report.canonical_tropical_periodic = check_canonical_tropical_periodicity(resolved);

  if (report.seed_periodic != report.tropical_periodic ||
      report.seed_periodic != report.signed_periodic ||
      report.seed_periodic != report.canonical_tropical_periodic) {
    std::ostringstream msg;
    msg << "periodicity criteria disagree: seed=" << report.seed_periodic
        << " tropical=" << report.tropical_periodic << " signed=" << report.signed_periodic
        << " canonical=" << report.canonical_tropical_periodic;
    throw InvariantViolation(msg.str());
  }

  if (report.periodic()) {
    // d_{sigma(i)} = d_i must hold for any periodic plan.
    const auto& d = plan.b.symmetrizer();
    for (int i = 0; i < plan.b.size(); ++i)
      if (d[report.sigma(i)] != d[i])
        throw InvariantViolation("skew-symmetrizer not sigma-invariant on a periodic plan");
  } else if (report.witness.empty()) {
    // point at the first offending C[T]/G[T] entry
    const TropicalTrace trace = c_matrix_trace(plan.b, plan.seq);
    const IntMatrix s = report.sigma.matrix();
    const auto g = g_matrix_trace(plan.b, plan.seq, trace.signs);
    std::ostringstream w;
    if (!report.sigma_found) w << "no relabeling permutation matches C[T]; ";
    for (int i = 0; i < plan.b.size() && report.witness.empty(); ++i)
      for (int j = 0; j < plan.b.size() && report.witness.empty(); ++j) {
        if (trace.c.back().at(i, j) != s.at(i, j)) {
          w << "C[T][" << i + 1 << "][" << j + 1 << "] = " << trace.c.back().at(i, j)
            << ", needs " << s.at(i, j);
          report.witness = w.str();
        } else if (g.back().at(i, j) != s.at(i, j)) {
          w << "G[T][" << i + 1 << "][" << j + 1 << "] = " << g.back().at(i, j) << ", needs "
            << s.at(i, j);
          report.witness = w.str();
        }
      }
    if (report.witness.empty())
      report.witness = "sequence is not sigma-periodic for the given sigma";
  }
  return report;
}

}  // namespace mutflow

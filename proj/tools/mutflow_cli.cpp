// Command-line front end: runs seed mutation traces, periodicity checks,
// dilogarithm-identity verification and Hamiltonian flow dumps from a JSON
// plan file.
//
// Exit codes: 0 pass, 1 negative result, 2 input error, 3 resource or
// overflow guard, 4 internal invariant violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "mutflow/dilog.hpp"
#include "mutflow/plan_io.hpp"

using nlohmann::json;
using namespace mutflow;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct Options {
  std::string plan_path;
  int samples = -1;  // -1: take from plan file
  int grid = 10;
  double tol = -1.0;
  std::uint64_t rng_seed = 20240901;
  bool json_out = false;
  std::string dump_trajectory;
  int steps = -1;
  bool on_m0 = false;
};

void print_matrix(std::ostream& out, const IntMatrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    out << "  [";
    for (int j = 0; j < m.size(); ++j) out << (j ? ", " : " ") << m.at(i, j);
    out << " ]\n";
  }
}

json seed_to_json(const Seed& seed) {
  const auto xn = seed_x_names(seed);
  const auto yn = seed_y_names(seed);
  json jx = json::array(), jy = json::array();
  for (const auto& x : seed.x) jx.push_back(to_string(x, xn));
  for (const auto& y : seed.y) jy.push_back(to_string(y, yn));
  return {{"B", to_json(seed.b.matrix())}, {"x", jx}, {"y", jy}};
}

void print_seed(std::ostream& out, const Seed& seed) {
  const auto xn = seed_x_names(seed);
  const auto yn = seed_y_names(seed);
  out << "B =\n";
  print_matrix(out, seed.b.matrix());
  for (std::size_t i = 0; i < seed.x.size(); ++i)
    out << "x" << i + 1 << " = " << to_string(seed.x[i], xn) << "\n";
  for (std::size_t i = 0; i < seed.y.size(); ++i)
    out << "y" << i + 1 << " = " << to_string(seed.y[i], yn) << "\n";
}

int cmd_mutate(const PlanFile& plan, const Options& opt) {
  const int steps = opt.steps < 0 ? static_cast<int>(plan.seq.size()) : opt.steps;
  if (steps > static_cast<int>(plan.seq.size()))
    throw InvalidArgument("--steps exceeds the plan's sequence length");
  Seed seed = Seed::initial(ExchangeMatrix(plan.b), plan.coefficients == "universal"
                                                        ? SemifieldKind::Universal
                                                        : SemifieldKind::Trivial);
  json trace = json::array();
  trace.push_back(seed_to_json(seed));
  if (!opt.json_out) {
    std::cout << "step 0 (initial seed)\n";
    print_seed(std::cout, seed);
  }
  for (int s = 0; s < steps; ++s) {
    seed = mutate_seed(seed, plan.seq[s]);
    trace.push_back(seed_to_json(seed));
    if (!opt.json_out) {
      std::cout << "\nstep " << s + 1 << " (mu_" << plan.seq[s] + 1 << ")\n";
      print_seed(std::cout, seed);
    }
  }
  if (opt.json_out) std::cout << json{{"trace", trace}}.dump(2) << "\n";
  return kExitPass;
}

int cmd_check_period(const PlanFile& plan, const Options& opt) {
  const int samples = opt.samples > 0 ? opt.samples : plan.samples;
  const auto report = check_all(plan.to_plan(), samples, opt.rng_seed, plan.limits);
  if (opt.json_out) {
    json j = to_json(report);
    // attach the integer traces for downstream tooling
    const ExchangeMatrix b(plan.b);
    const auto trace = c_matrix_trace(b, plan.seq);
    json c_trace = json::array(), g_trace = json::array(), b_trace = json::array();
    for (const auto& m : trace.c) c_trace.push_back(to_json(m));
    for (const auto& m : trace.b) b_trace.push_back(to_json(m));
    for (const auto& m : g_matrix_trace(b, plan.seq, trace.signs))
      g_trace.push_back(to_json(m));
    j["c_trace"] = std::move(c_trace);
    j["g_trace"] = std::move(g_trace);
    j["b_trace"] = std::move(b_trace);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (report.periodic() ? "sigma-periodic" : "not periodic") << "\n";
    std::cout << "sigma (1-based image): [";
    for (std::size_t i = 0; i < report.sigma.to_one_based().size(); ++i)
      std::cout << (i ? "," : "") << report.sigma.to_one_based()[i];
    std::cout << "]\n";
    std::cout << "tropical signs: ";
    for (Sign s : report.signs) std::cout << (s == Sign::plus ? '+' : '-');
    std::cout << "\n";
    if (!report.periodic()) std::cout << "witness: " << report.witness << "\n";
  }
  return report.periodic() ? kExitPass : kExitNegative;
}

int cmd_verify_identity(const PlanFile& plan, const Options& opt) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-9;
  const int samples = opt.samples > 0 ? opt.samples : plan.samples;
  const MutationPlan mplan = plan.to_plan();
  const auto report = check_all(mplan, samples, opt.rng_seed, plan.limits);
  if (!report.periodic()) {
    std::cerr << "plan is not sigma-periodic; identity does not apply\n";
    return kExitNegative;
  }
  const ExchangeMatrix b(plan.b);
  const int n = b.size();

  double max_resid = 0.0;
  long evaluations = 0;
  // geometric grid on (0.1, 10)^n
  std::vector<int> idx(n, 0);
  const int g = opt.grid;
  for (bool done = g <= 0; !done;) {
    std::vector<double> y0(n);
    for (int i = 0; i < n; ++i)
      y0[i] = std::pow(10.0, -1.0 + 2.0 * (idx[i] + 0.5) / g);
    max_resid = std::max(max_resid, std::abs(identity_residual(b, plan.seq, y0)));
    ++evaluations;
    int c = 0;
    while (c < n && ++idx[c] == g) idx[c++] = 0;
    done = c == n;
  }
  std::mt19937_64 rng(opt.rng_seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    std::vector<double> y0(n);
    for (int i = 0; i < n; ++i) y0[i] = std::pow(10.0, dist(rng));
    max_resid = std::max(max_resid, std::abs(identity_residual(b, plan.seq, y0)));
    ++evaluations;
  }
  const bool pass = max_resid < tol;
  if (opt.json_out) {
    std::cout << json{{"max_residual", max_resid},
                      {"evaluations", evaluations},
                      {"tol", tol},
                      {"rng_seed", opt.rng_seed},
                      {"pass", pass}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "max |residual| over " << evaluations << " points: " << max_resid
              << (pass ? "  (pass" : "  (FAIL") << ", tol " << tol << ")\n";
  }
  return pass ? kExitPass : kExitNegative;
}

int cmd_flow(const PlanFile& plan, const Options& opt) {
  const MutationPlan mplan = plan.to_plan();
  const ExchangeMatrix b(plan.b);
  const int n = b.size();
  const auto signs = tropical_sign_sequence(b, plan.seq);

  PhasePoint pt;
  if (plan.point) {
    pt = *plan.point;
  } else {
    std::mt19937_64 rng(opt.rng_seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    pt.u.resize(n);
    pt.p.resize(n);
    for (int i = 0; i < n; ++i) {
      pt.u[i] = dist(rng);
      pt.p[i] = dist(rng);
    }
  }
  CanonicalContext ctx0(b);
  if (opt.on_m0) pt = project_M0(ctx0, pt.u);

  const int per_span = opt.samples > 0 ? opt.samples : 8;
  json steps = json::array();
  CanonicalContext ctx = ctx0;
  PhasePoint cur = pt;
  double action = 0.0;
  for (std::size_t s = 0; s < plan.seq.size(); ++s) {
    const int k = plan.seq[s];
    const Sign eps = signs[s];
    action += lagrangian_general(ctx, k, eps, cur);
    PhasePoint node = cur;
    for (int j = 0; j <= per_span; ++j) {
      if (j > 0) node = flow_ode(ctx, k, eps, node, 1.0 / per_span, 1e-3);
      steps.push_back(json{{"t", s + static_cast<double>(j) / per_span},
                           {"u", node.u},
                           {"p", node.p},
                           {"H", hamiltonian(ctx, k, eps, node)},
                           {"L", lagrangian_general(ctx, k, eps, node)}});
    }
    std::tie(cur, ctx) = tau_canonical(ctx, k, eps, node);
  }

  const auto report = check_all(mplan, std::max(1, plan.samples), opt.rng_seed, plan.limits);
  if (report.periodic() && std::abs(action) >= 1e-9)
    throw InvariantViolation("action integral fails to vanish on a periodic plan");

  json out{{"action", action},
           {"periodic", report.periodic()},
           {"rng_seed", opt.rng_seed},
           {"initial", {{"u", pt.u}, {"p", pt.p}}},
           {"signs", signs_to_json(signs)}};
  if (!opt.dump_trajectory.empty()) {
    std::ofstream f(opt.dump_trajectory);
    if (!f) throw InvalidArgument("cannot open trajectory output file");
    json full = out;
    full["trajectory"] = steps;
    f << full.dump(2) << "\n";
  }
  if (opt.json_out)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << "action integral S = " << action
              << (report.periodic() ? " (periodic plan, |S| < 1e-9 verified)\n" : "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster-algebra mutations, Hamiltonian flows and dilogarithm identities"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--plan", opt.plan_path, "JSON plan file")->required();
    sub->add_option("--samples", opt.samples, "random sample count");
    sub->add_option("--tol", opt.tol, "tolerance override");
    sub->add_option("--rng-seed", opt.rng_seed, "RNG seed (default fixed)");
    sub->add_flag("--json", opt.json_out, "machine-readable output");
  };

  CLI::App* mutate = app.add_subcommand("mutate", "print the seed trace along the plan");
  add_common(mutate);
  mutate->add_option("--steps", opt.steps, "number of mutations to apply (default: all)");

  CLI::App* check = app.add_subcommand("check-period", "run the four periodicity criteria");
  add_common(check);

  CLI::App* verify =
      app.add_subcommand("verify-identity", "verify the Rogers dilogarithm identity");
  add_common(verify);
  verify->add_option("--grid", opt.grid, "grid resolution per axis on (0.1, 10)");

  CLI::App* flow = app.add_subcommand("flow", "integrate the Hamiltonian flow along the plan");
  add_common(flow);
  flow->add_option("--dump-trajectory", opt.dump_trajectory, "write trajectory JSON to file");
  flow->add_flag("--on-m0", opt.on_m0, "project the initial point to the small phase space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInput;
  }

  try {
    const PlanFile plan = load_plan(opt.plan_path);
    if (mutate->parsed()) return cmd_mutate(plan, opt);
    if (check->parsed()) return cmd_check_period(plan, opt);
    if (verify->parsed()) return cmd_verify_identity(plan, opt);
    if (flow->parsed()) return cmd_flow(plan, opt);
    return kExitInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const OverflowError& e) {
    std::cerr << "overflow guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

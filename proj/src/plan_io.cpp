#include "mutflow/plan_io.hpp"

#include <fstream>
#include <limits>

namespace mutflow {

namespace {

IntMatrix parse_matrix(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array() || j.empty()) throw InvalidArgument(key + " must be a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InvalidArgument(key + " must be square");
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number_integer()) throw InvalidArgument(key + " entries must be integers");
      m.at(i, k) = row[k].get<std::int64_t>();
    }
  }
  return m;
}

}  // namespace

MutationPlan PlanFile::to_plan() const {
  std::optional<Permutation> sigma;
  if (sigma_image) sigma = Permutation(std::vector<int>(*sigma_image));
  return MutationPlan(ExchangeMatrix(b), seq, std::move(sigma));
}

PlanFile parse_plan(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("plan must be a JSON object");
  if (!j.contains("B")) throw InvalidArgument("plan is missing \"B\"");
  PlanFile plan;
  plan.b = parse_matrix(j.at("B"), "B");
  const int n = plan.b.size();

  if (j.contains("seq")) {
    if (!j.at("seq").is_array()) throw InvalidArgument("seq must be an array");
    for (const auto& v : j.at("seq")) {
      if (!v.is_number_integer()) throw InvalidArgument("seq entries must be integers");
      const int k = v.get<int>();
      if (k < 1 || k > n) throw InvalidArgument("seq entry out of range 1..n");
      plan.seq.push_back(k - 1);
    }
  }
  if (j.contains("sigma")) {
    const auto& sj = j.at("sigma");
    if (!sj.is_array() || static_cast<int>(sj.size()) != n)
      throw InvalidArgument("sigma must be a length-n image array");
    std::vector<int> img;
    for (const auto& v : sj) {
      if (!v.is_number_integer()) throw InvalidArgument("sigma entries must be integers");
      const int s = v.get<int>();
      if (s < 1 || s > n) throw InvalidArgument("sigma entry out of range 1..n");
      img.push_back(s - 1);
    }
    plan.sigma_image = std::move(img);
  }
  if (j.contains("coefficients")) {
    plan.coefficients = j.at("coefficients").get<std::string>();
    if (plan.coefficients != "universal" && plan.coefficients != "trivial")
      throw InvalidArgument("coefficients must be \"universal\" or \"trivial\"");
  }
  if (j.contains("y0")) {
    std::vector<double> y0;
    for (const auto& v : j.at("y0")) {
      if (!v.is_number()) throw InvalidArgument("y0 entries must be numbers");
      y0.push_back(v.get<double>());
      if (!(y0.back() > 0.0)) throw InvalidArgument("y0 entries must be positive");
    }
    if (static_cast<int>(y0.size()) != n) throw InvalidArgument("y0 must have length n");
    plan.y0 = std::move(y0);
  }
  if (j.contains("point")) {
    const auto& pj = j.at("point");
    if (!pj.is_object() || !pj.contains("u") || !pj.contains("p"))
      throw InvalidArgument("point must be {\"u\": [...], \"p\": [...]}");
    PhasePoint pt;
    pt.u = pj.at("u").get<std::vector<double>>();
    pt.p = pj.at("p").get<std::vector<double>>();
    if (static_cast<int>(pt.u.size()) != n || static_cast<int>(pt.p.size()) != n)
      throw InvalidArgument("point coordinates must have length n");
    plan.point = std::move(pt);
  }
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n) throw InvalidArgument("labels must have length n");
    plan.labels = std::move(labels);
  }
  if (j.contains("samples")) {
    plan.samples = j.at("samples").get<int>();
    if (plan.samples < 1) throw InvalidArgument("samples must be >= 1");
  }
  if (j.contains("tol")) {
    plan.tol = j.at("tol").get<double>();
    if (!(plan.tol > 0)) throw InvalidArgument("tol must be positive");
  }
  if (j.contains("limits")) {
    const auto& lj = j.at("limits");
    if (lj.contains("max_rank")) plan.limits.max_symbolic_rank = lj.at("max_rank").get<int>();
    if (lj.contains("max_length"))
      plan.limits.max_symbolic_length = lj.at("max_length").get<int>();
    if (lj.contains("max_terms"))
      set_polynomial_term_limit(lj.at("max_terms").get<std::size_t>());
  }
  return plan;
}

PlanFile load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open plan file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("plan file is not valid JSON: ") + e.what());
  }
  return parse_plan(j);
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) {
      const Integer& v = m.at(i, j);
      // entries normally fit an int64; render in decimal when they do not
      if (v <= std::numeric_limits<std::int64_t>::max() &&
          v >= std::numeric_limits<std::int64_t>::min())
        row.push_back(v.convert_to<std::int64_t>());
      else
        row.push_back(v.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) {
      const auto& v = m.at(i, j);
      row.push_back({numerator(v).convert_to<std::int64_t>(),
                     denominator(v).convert_to<std::int64_t>()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json signs_to_json(const std::vector<Sign>& signs) {
  nlohmann::json out = nlohmann::json::array();
  for (Sign s : signs) out.push_back(s == Sign::plus ? "+" : "-");
  return out;
}

nlohmann::json to_json(const PeriodicityReport& report) {
  return {
      {"periodic", report.periodic()},
      {"sigma", report.sigma.to_one_based()},
      {"sigma_found", report.sigma_found},
      {"signs", signs_to_json(report.signs)},
      {"checks",
       {{"seed", report.seed_periodic},
        {"tropical", report.tropical_periodic},
        {"signed", report.signed_periodic},
        {"canonical_tropical", report.canonical_tropical_periodic}}},
      {"witness", report.witness},
  };
}

}  // namespace mutflow

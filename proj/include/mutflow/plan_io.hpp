#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutflow/dirac.hpp"
#include "mutflow/periodicity.hpp"

namespace mutflow {

// Parsed plan file. Indices arrive 1-based on the wire and are converted
// here; everything in memory is 0-based.
struct PlanFile {
  IntMatrix b;
  std::vector<int> seq;                        // 0-based
  std::optional<std::vector<int>> sigma_image;  // 0-based
  std::string coefficients = "universal";
  std::optional<std::vector<double>> y0;
  std::optional<PhasePoint> point;
  std::optional<std::vector<std::string>> labels;
  int samples = 20;
  double tol = 1e-9;
  ResourceLimits limits;

  MutationPlan to_plan() const;
};

// Schema-validating parse; throws InvalidArgument with a description on any
// malformed input.
PlanFile parse_plan(const nlohmann::json& j);
PlanFile load_plan(const std::string& path);

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const RatMatrix& m);  // entries as [num, den]
nlohmann::json to_json(const PeriodicityReport& report);
nlohmann::json signs_to_json(const std::vector<Sign>& signs);

}  // namespace mutflow

#pragma once

#include "ccdispatch/dispatch.hpp"
#include "ccdispatch/eval.hpp"
#include "ccdispatch/qp.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccd {

// Everything a CLI run needs. Relative paths are resolved against the
// directory of the config file.
struct RunConfig {
  std::filesystem::path case_path;
  std::filesystem::path scenarios_path;       // training samples; optional when raw_path is set
  std::filesystem::path raw_path;             // raw error history for the copula generator
  std::filesystem::path test_scenarios_path;  // optional out-of-sample set
  std::filesystem::path output_dir = "out";

  Method method = Method::fica;
  ApproxConfig approx;
  double theta_rel = 0.0;  // added to theta as a multiple of mean|e| of the training set
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t test_size = 5000;
  std::optional<int> start_hour;
  std::optional<int> horizon;
  bool include_flow_limits = true;
  std::vector<LinearRow> extra_linear;
  SolverOptions solver;

  std::vector<InstanceSpec> grid;
  std::vector<std::uint64_t> seeds;
  std::size_t workers = 1;
  double cost_spread = 0.2;

  std::vector<double> thetas;
  double target_reliability = 0.95;

  std::string echo;  // compact JSON of the effective configuration
};

// `overrides` are key/value pairs applied on top of the file (values are parsed
// as JSON when possible, otherwise taken as strings). Throws ParseError or
// ValidationError naming the offending key.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});
RunConfig load_config(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Loads the case and training samples and applies the horizon window.
DispatchProblem load_problem(const RunConfig& cfg);

// Out-of-sample set: the configured file, or copula draws from the raw history.
ErrorSampleSet load_test_set(const RunConfig& cfg, const DispatchProblem& problem);

InstanceSource load_instance_source(const RunConfig& cfg);

}  // namespace ccd

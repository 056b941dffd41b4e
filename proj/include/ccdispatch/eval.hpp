#pragma once

#include "ccdispatch/dispatch.hpp"
#include "ccdispatch/netmodel.hpp"
#include "ccdispatch/qp.hpp"
#include "ccdispatch/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccd {

struct ReliabilityReport {
  std::size_t n_test = 0;
  std::size_t jointly_satisfied = 0;
  double frequency = 0.0;
  // Number of test scenarios with at least one violated row in the family.
  std::map<std::string, std::size_t> violations;
  double worst_slack = 0.0;  // most negative slack in MW over all rows and scenarios
};

// Evaluates adjusted generation and DC line flows against their limits for each
// test scenario; a row counts as satisfied when its slack is >= -tolerance.
ReliabilityReport joint_reliability(const DispatchSolution& sol, const ErrorSampleSet& test,
                                    const NetworkCase& network, const PtdfMatrices& ptdf,
                                    bool include_flow_limits = true, double tolerance = 1e-7);

struct OracleResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<std::size_t> support;  // scenarios enforced by the best subset (0-based)
  std::size_t subsets = 0;
  std::size_t infeasible_subsets = 0;
};

inline constexpr std::size_t kOracleMaxSamples = 12;

// Exact empirical joint chance constraint at theta = 0: every subset of
// N - floor(eps*N) scenarios is enforced in turn and the best objective kept.
OracleResult empirical_jcc_oracle(const DispatchProblem& problem, const SolverOptions& opts = {});

// Splits or merges generators so the case has exactly `count` units while
// preserving total capacity and the aggregate cost curve of each original unit.
NetworkCase resize_generators(const NetworkCase& network, std::size_t count);

struct InstanceSpec {
  std::size_t horizon = 4;
  std::size_t generators = 0;  // 0 keeps the case as is
  std::size_t samples = 100;
  double epsilon = 0.05;
  double theta = 0.0;       // MW, added to theta_rel * mean|e|
  double theta_rel = 0.0;
  bool include_flow_limits = true;

  std::string describe() const;
};

// Random start hour, per-unit cost perturbation in [1 - spread, 1 + spread],
// and copula-drawn training samples, all derived from `seed`.
struct InstanceSource {
  NetworkCase base;
  CopulaModel model;
  double cost_spread = 0.2;
};

DispatchProblem make_instance(const InstanceSource& source, const InstanceSpec& spec, std::uint64_t seed,
                              Method method = Method::fica);
ErrorSampleSet make_test_set(const InstanceSource& source, const InstanceSpec& spec, std::uint64_t seed,
                             std::size_t n_test);

struct MethodRecord {
  Method method = Method::fica;
  std::string status;
  double objective = 0.0;
  double assemble_seconds = 0.0;
  double solve_seconds = 0.0;
  double total_seconds = 0.0;
  int iterations = 0;
  std::size_t scenario_rows = 0;
  std::size_t inequality_rows = 0;
  std::optional<double> reliability;
  std::string error;
};

struct BenchmarkRecord {
  std::size_t instance = 0;
  InstanceSpec spec;
  std::uint64_t seed = 0;
  double theta_value = 0.0;
  double one_dim_proportion = 0.0;
  std::size_t generators = 0;
  std::size_t lines = 0;
  MethodRecord result;
};

struct BenchmarkOptions {
  std::vector<InstanceSpec> grid;
  std::vector<std::uint64_t> seeds;
  std::size_t workers = 1;
  std::size_t test_size = 0;  // 0 skips the reliability column
  SolverOptions solver;
};

// One record per (instance, seed, method), ordered by that key.
std::vector<BenchmarkRecord> benchmark_methods(const InstanceSource& source, const BenchmarkOptions& opts);

struct BenchmarkSummary {
  std::size_t instance = 0;
  InstanceSpec spec;
  std::size_t runs = 0;
  double fica_mean_solve = 0.0;
  double cvar_mean_solve = 0.0;
  double speedup_mean = 0.0;  // mean CVaR solve time / mean FICA solve time
  double speedup_lo = 0.0;    // 0.5th percentile of the per-seed ratio
  double speedup_hi = 0.0;    // 99.5th percentile of the per-seed ratio
  double row_ratio = 0.0;     // FICA scenario rows / CVaR scenario rows
  double max_rel_objective_gap = 0.0;
  std::size_t failures = 0;
};

std::vector<BenchmarkSummary> summarize(const std::vector<BenchmarkRecord>& records);

// Linear-interpolation percentile, q in [0, 1].
double percentile(std::vector<double> values, double q);

std::string benchmark_csv_header();
std::string benchmark_csv(const std::vector<BenchmarkRecord>& records);
std::string summary_table(const std::vector<BenchmarkSummary>& summaries);

struct SweepRow {
  double theta = 0.0;
  std::string status;
  double objective = 0.0;
  double reliability = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<double> smallest_meeting_target;
  bool objective_monotone = true;
};

SweepResult sweep_theta(const DispatchProblem& problem, const std::vector<double>& thetas,
                        const ErrorSampleSet& test, double target, const SolverOptions& opts = {});

}  // namespace ccd

#pragma once

#include "ccdispatch/netmodel.hpp"
#include "ccdispatch/qp.hpp"
#include "ccdispatch/reform.hpp"
#include "ccdispatch/scenario.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ccd {

enum class Method { fica, cvar };
const char* to_string(Method m);
Method parse_method(const std::string& text);

// p_{t,g} occupies [0, T*G), alpha_{t,g} occupies [T*G, 2*T*G); both t-major.
struct VariableMap {
  std::size_t horizon = 0;
  std::size_t generators = 0;

  int p(std::size_t t, std::size_t g) const { return static_cast<int>(t * generators + g); }
  int alpha(std::size_t t, std::size_t g) const {
    return static_cast<int>(horizon * generators + t * generators + g);
  }
  int count() const { return static_cast<int>(2 * horizon * generators); }
  std::vector<std::string> names() const;
};

// A user-supplied linear row over named dispatch variables (p_t{t}_g{g}, alpha_t{t}_g{g}).
struct LinearRow {
  std::string name;
  std::vector<std::pair<std::string, double>> terms;
  std::string sense = "<=";  // "<=", ">=" or "="
  double rhs = 0.0;
};

struct DispatchProblem {
  NetworkCase network;
  PtdfMatrices ptdf;
  ErrorSampleSet samples;
  ApproxConfig cfg;
  Method method = Method::fica;
  std::vector<LinearRow> extra_linear;
  bool include_flow_limits = true;
};

struct AssembledProblem {
  QpProblem qp;
  VariableMap vars;
  std::vector<UncertainConstraint> constraints;
  ConstraintBlock block;
  Classification classes;
  std::size_t k = 0;
  std::size_t scenario_rows = 0;
};

// Uncertain rows of the joint chance constraint: generator upper/lower limits
// (one-dimensional) for every (t, g), then flow upper/lower limits for every (t, l).
std::vector<UncertainConstraint> build_wjcc_constraints(const NetworkCase& network, const PtdfMatrices& ptdf,
                                                        const VariableMap& vars, bool include_flow_limits);

// Objective, power balance, AGC sum, variable bounds and extra_linear rows only.
QpProblem assemble_deterministic(const DispatchProblem& problem, const VariableMap& vars);

AssembledProblem assemble(const DispatchProblem& problem);

struct DispatchSolution {
  Method method = Method::fica;
  ApproxConfig cfg;
  std::size_t horizon = 0;
  std::size_t generators = 0;
  std::vector<double> p;      // t-major T x G
  std::vector<double> alpha;  // t-major T x G
  double s = 0.0;
  std::vector<double> r;
  double m = 0.0;  // epigraph value; the direct max when theta == 0
  double objective = 0.0;
  QpSolution solver;
  KktResiduals kkt;
  double assemble_seconds = 0.0;
  std::vector<double> balance_residual;  // |sum p + sum wind forecast - sum demand| per t
  std::vector<double> alpha_residual;    // |sum alpha - 1| per t

  double p_at(std::size_t t, std::size_t g) const { return p[t * generators + g]; }
  double alpha_at(std::size_t t, std::size_t g) const { return alpha[t * generators + g]; }
  bool optimal() const { return solver.status == QpStatus::optimal; }
};

DispatchSolution recover(const DispatchProblem& problem, const AssembledProblem& assembled,
                         const QpSolution& qp_solution);

// Assembles and solves. A horizon step whose net load lies outside the
// generators' total range is reported as infeasible without calling the solver.
DispatchSolution solve_dispatch(const DispatchProblem& problem, const SolverOptions& opts = {});
DispatchSolution solve_assembled(const DispatchProblem& problem, const AssembledProblem& assembled,
                                 const SolverOptions& opts = {});

// p~_{t,g} = p_{t,g} - alpha_{t,g} * sum_w e_{t,w}; `errors` holds T*W values, t-major.
std::vector<double> realize_adjusted_generation(const DispatchSolution& sol, std::span<const double> errors,
                                                std::size_t farms);

// Minimum slack per row family of the compiled block at the solution point.
std::vector<std::pair<std::string, double>> family_min_slacks(const AssembledProblem& assembled,
                                                              std::span<const double> x);

// JSON report: objective, p and alpha tables, ancillary values, row slacks,
// solver statistics, and an example AGC adjustment.
std::string solution_report_json(const DispatchProblem& problem, const AssembledProblem& assembled,
                                 const DispatchSolution& sol, const std::string& config_echo = "{}");

}  // namespace ccd

#pragma once

#include "ccdispatch/qp.hpp"
#include "ccdispatch/scenario.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ccd {

struct Term {
  int var = 0;
  double coef = 0.0;
};
using LinearTerms = std::vector<Term>;

double evaluate_terms(const LinearTerms& terms, std::span<const double> x);

// Coefficient of random dimension `dim` in an uncertain row: constant + terms . x
struct StochasticTerm {
  std::size_t dim = 0;
  double constant = 0.0;
  LinearTerms terms;
};

enum class ConstraintFamily { gen_upper, gen_lower, flow_upper, flow_lower, generic };
const char* to_string(ConstraintFamily f);

// Marks a row whose random part is sign * x[alpha_var] * (sum of all farms at `time`).
struct OneDimMarker {
  int sign = 1;
  int alpha_var = 0;
  std::size_t time = 0;
};

// d(x, xi) = det_const + det_coeffs . x + sum_dims (constant + terms . x) * xi[dim] >= 0
struct UncertainConstraint {
  std::string id;
  ConstraintFamily family = ConstraintFamily::generic;
  double det_const = 0.0;
  LinearTerms det_coeffs;
  std::vector<StochasticTerm> stoch;
  std::optional<OneDimMarker> one_dim;
};

double evaluate(const UncertainConstraint& c, std::span<const double> x, std::span<const double> xi);

// True when the marker exactly describes the stochastic coefficients.
bool marker_consistent(const UncertainConstraint& c, std::size_t farms);

struct ApproxConfig {
  double epsilon = 0.05;
  double theta = 0.0;
  std::vector<double> kappa;  // empty means 1 for every sample
  std::optional<std::size_t> k_override;
  std::string norm = "l1";

  std::size_t k(std::size_t n) const;
  double kappa_at(std::size_t i) const { return kappa.empty() ? 1.0 : kappa[i]; }
  // Throws ValidationError naming the offending field.
  void validate(std::size_t samples) const;
};

enum class RowFamily {
  sign,
  budget,
  cvar_scenario,
  fica_reduced_scenario,
  fica_full_scenario,
  strengthen_k1,
  strengthen_nk,
  dual_norm
};
const char* to_string(RowFamily f);

struct RowTag {
  RowFamily family = RowFamily::sign;
  int constraint = -1;  // index into the constraint list
  int sample = -1;
};

// Ancillary variables follow the decision variables: s, r_1..r_N, then m when theta > 0.
struct AncillaryLayout {
  int num_decision = 0;
  std::size_t samples = 0;
  bool has_m = false;

  int s() const { return num_decision; }
  int r(std::size_t i) const { return num_decision + 1 + static_cast<int>(i); }
  int m() const { return num_decision + 1 + static_cast<int>(samples); }
  int total() const { return num_decision + 1 + static_cast<int>(samples) + (has_m ? 1 : 0); }
};

// Rows of the form coefficients . (x, s, r, m) >= rhs.
struct ConstraintBlock {
  AncillaryLayout layout;
  std::vector<std::string> ancillary_names;
  SparseRows rows;
  std::vector<RowTag> tags;

  std::size_t count(RowFamily f) const;
  double slack(std::size_t row, std::span<const double> point) const { return rows.dot(row, point) - rows.rhs(row); }
  void append(const ConstraintBlock& other);
};

AncillaryLayout make_layout(int num_decision, std::size_t samples, const ApproxConfig& cfg);

ConstraintBlock build_cvar_block(const std::vector<UncertainConstraint>& constraints,
                                 const ErrorSampleSet& samples, const ApproxConfig& cfg,
                                 int num_decision);

ConstraintBlock build_fica_block(const std::vector<UncertainConstraint>& constraints,
                                 const ErrorSampleSet& samples, const AggregateOrdering& ordering,
                                 const ApproxConfig& cfg, int num_decision);

// Rows m >= v and m >= -v for each distinct stochastic component v (deduplicated
// up to sign). Empty when theta == 0.
ConstraintBlock build_dualnorm_epigraph(const std::vector<UncertainConstraint>& constraints,
                                        const ApproxConfig& cfg, const AncillaryLayout& layout);

struct Classification {
  std::vector<std::size_t> one_dim;
  std::vector<std::size_t> other;
  double proportion = 0.0;
};
Classification classify_constraints(const std::vector<UncertainConstraint>& constraints, std::size_t farms);

// max over constraints and dimensions of |constant + terms . x|.
double max_dual_norm(const std::vector<UncertainConstraint>& constraints, std::span<const double> x);

}  // namespace ccd

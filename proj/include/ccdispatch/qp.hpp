#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ccd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Compressed sparse rows with a right-hand side and a name per row. Column
// indices inside a row are kept sorted and unique.
class SparseRows {
 public:
  std::size_t size() const { return rhs_.size(); }
  std::size_t nonzeros() const { return cols_.size(); }

  void add(std::span<const int> cols, std::span<const double> vals, double rhs, std::string name);
  void reserve(std::size_t rows, std::size_t nnz);

  std::span<const int> cols(std::size_t r) const {
    return {cols_.data() + start_[r], start_[r + 1] - start_[r]};
  }
  std::span<const double> vals(std::size_t r) const {
    return {vals_.data() + start_[r], start_[r + 1] - start_[r]};
  }
  double rhs(std::size_t r) const { return rhs_[r]; }
  const std::string& name(std::size_t r) const { return names_[r]; }

  double dot(std::size_t r, std::span<const double> x) const;

 private:
  std::vector<std::size_t> start_{0};
  std::vector<int> cols_;
  std::vector<double> vals_;
  std::vector<double> rhs_;
  std::vector<std::string> names_;
};

struct QuadTerm {
  int i = 0;
  int j = 0;  // i <= j
  double value = 0.0;
};

// minimize   0.5 x'Qx + c'x + c0
// subject to A_eq x = b_eq,  A_in x >= b_in,  lower <= x <= upper.
// Q is given by its upper triangle (diagonal included).
struct QpProblem {
  int num_vars = 0;
  std::vector<std::string> var_names;
  std::vector<QuadTerm> quad;
  std::vector<double> lin;
  double constant = 0.0;
  SparseRows eq;
  SparseRows ineq;
  std::vector<double> lower;
  std::vector<double> upper;

  explicit QpProblem(int n = 0);
  int add_variable(std::string name, double lo = -kInf, double hi = kInf, double cost = 0.0);

  double objective(std::span<const double> x) const;
  // Q x (full symmetric product).
  std::vector<double> quad_product(std::span<const double> x) const;
  // Throws ValidationError on inconsistent dimensions, non-finite data, or a
  // negative diagonal.
  void validate() const;
};

enum class QpStatus { optimal, infeasible, unbounded, iteration_limit };
const char* to_string(QpStatus s);

struct SolverOptions {
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  int max_iter = 200;
  double time_limit_s = 3600.0;
  bool verbose = false;
};

struct QpSolution {
  QpStatus status = QpStatus::iteration_limit;
  std::vector<double> x;
  std::vector<double> y_eq;     // multipliers of A_eq x = b_eq
  std::vector<double> z_ineq;   // >= 0, multipliers of A_in x >= b_in
  std::vector<double> z_lower;  // >= 0
  std::vector<double> z_upper;  // >= 0
  double objective = 0.0;
  int iterations = 0;
  double solve_seconds = 0.0;
  std::string message;
  std::string worst_row;  // most violated row at termination, when not optimal
};

QpSolution solve_qp(const QpProblem& qp, const SolverOptions& opts = {});

// Infinity-norm KKT residuals, each divided by (1 + the norm of the data it
// is measured against): stationarity by |c|, equality rows by |b_eq|,
// inequality/bound violation by |b_in| and the bounds, complementarity by |objective|.
struct KktResiduals {
  double stationarity = 0.0;
  double primal_eq = 0.0;
  double primal_ineq = 0.0;
  double dual_sign = 0.0;
  double complementarity = 0.0;
  double max() const;
};

KktResiduals kkt_residuals(const QpProblem& qp, const QpSolution& sol);

// CPLEX-style LP text format. Sections: Minimize, Subject To, Bounds, End.
std::string format_lp_text(const QpProblem& qp);
void export_lp_text(const QpProblem& qp, const std::filesystem::path& path);
QpProblem parse_lp_text(const std::string& text);
QpProblem read_lp_text(const std::filesystem::path& path);

}  // namespace ccd

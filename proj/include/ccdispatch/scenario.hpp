#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ccd {

// N samples of the forecast-error tensor, stored row-major as N x (T*W) with
// the time step as the major index inside a row.
class ErrorSampleSet {
 public:
  ErrorSampleSet() = default;
  ErrorSampleSet(std::size_t samples, std::size_t horizon, std::size_t farms);
  ErrorSampleSet(std::size_t samples, std::size_t horizon, std::size_t farms,
                 std::vector<double> data);

  std::size_t size() const { return n_; }
  std::size_t horizon() const { return horizon_; }
  std::size_t farms() const { return farms_; }
  std::size_t dims() const { return horizon_ * farms_; }
  std::size_t dim(std::size_t t, std::size_t w) const { return t * farms_ + w; }

  double operator()(std::size_t i, std::size_t t, std::size_t w) const {
    return data_[i * dims() + dim(t, w)];
  }
  double& operator()(std::size_t i, std::size_t t, std::size_t w) {
    return data_[i * dims() + dim(t, w)];
  }
  std::span<const double> sample(std::size_t i) const {
    return {data_.data() + i * dims(), dims()};
  }
  const std::vector<double>& data() const { return data_; }

  // Sum over wind farms of sample i at time step t.
  double aggregate(std::size_t i, std::size_t t) const;
  double mean_abs() const;

  // Throws ValidationError when empty, non-finite, or not matching (T, W).
  void validate(std::size_t horizon, std::size_t farms) const;

  ErrorSampleSet window(std::size_t start, std::size_t length) const;
  ErrorSampleSet subset(std::span<const std::size_t> indices) const;
  ErrorSampleSet head(std::size_t count) const;

 private:
  std::size_t n_ = 0;
  std::size_t horizon_ = 0;
  std::size_t farms_ = 0;
  std::vector<double> data_;
};

// Header `e_t{t}_w{w}` (1-based), one comma-separated row per sample.
ErrorSampleSet read_scenario_file(const std::filesystem::path& path);
std::string scenario_header(std::size_t horizon, std::size_t farms);
std::string format_scenarios(const ErrorSampleSet& samples);
void write_scenario_file(const std::filesystem::path& path, const ErrorSampleSet& samples);

// Per time step: aggregate sums, stable ascending permutation, order statistics.
class AggregateOrdering {
 public:
  std::size_t size() const { return n_; }
  std::size_t horizon() const { return horizon_; }

  double sum(std::size_t i, std::size_t t) const { return sums_[t * n_ + i]; }
  // j-th smallest aggregate sum at time t, j in [1, N].
  double order_stat(std::size_t t, std::size_t j) const;
  // Sample index holding rank j (1-based) at time t.
  std::size_t sample_at_rank(std::size_t t, std::size_t j) const;
  std::span<const std::size_t> permutation(std::size_t t) const {
    return {perm_.data() + t * n_, n_};
  }
  // Sample indices of the k smallest and k largest sums at time t; min(2k, N) members.
  std::vector<std::size_t> reduction_set(std::size_t t, std::size_t k) const;

  friend AggregateOrdering build_ordering(const ErrorSampleSet& samples);

 private:
  std::size_t n_ = 0;
  std::size_t horizon_ = 0;
  std::vector<double> sums_;         // t-major, unsorted
  std::vector<std::size_t> perm_;    // t-major
  std::vector<double> sorted_;       // t-major
};

AggregateOrdering build_ordering(const ErrorSampleSet& samples);

// j-th smallest element of {alpha * S_i,t}. For j <= (N+1)/2 this is
// min(alpha*S_(j), alpha*S_(N-j+1)).
double kth_scaled_value(double alpha, const AggregateOrdering& ordering, std::size_t t,
                        std::size_t j);

// k = floor(epsilon * N), guarded against representation error in epsilon * N.
std::size_t reduction_size(double epsilon, std::size_t n);

// Gaussian KDE marginal with a tabulated CDF used for inversion.
struct KdeMarginal {
  bool point_mass = false;
  double point = 0.0;
  double bandwidth = 0.0;
  std::vector<double> support;
  std::vector<double> grid_x;
  std::vector<double> grid_cdf;

  double cdf(double x) const;       // exact kernel sum
  double quantile(double u) const;  // grid inversion, linear interpolation
};

inline constexpr std::size_t kKdeGridPoints = 2048;

KdeMarginal fit_kde_marginal(std::span<const double> values);

struct CopulaModel {
  std::size_t horizon = 0;
  std::size_t farms = 0;
  std::vector<KdeMarginal> marginals;  // one per (t, w), t-major
  Eigen::MatrixXd correlation;         // symmetric, unit diagonal, PSD
  Eigen::MatrixXd factor;              // correlation = factor * factor^T
  std::vector<std::string> warnings;
};

// Projects `correlation` onto the PSD cone (eigenvalue clipping, unit diagonal
// restored) and precomputes the sampling factor.
CopulaModel make_copula_model(std::size_t horizon, std::size_t farms,
                              std::vector<KdeMarginal> marginals, Eigen::MatrixXd correlation);

CopulaModel fit_copula_model(const ErrorSampleSet& raw);

ErrorSampleSet sample_errors(const CopulaModel& model, std::size_t n, std::uint64_t seed);

double standard_normal_cdf(double x);
double standard_normal_quantile(double p);

// Average ranks (1-based, ties share the mean rank).
std::vector<double> average_ranks(std::span<const double> values);
double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);
// Sup distance between the empirical CDF of `values` and the marginal's CDF.
double ks_distance(std::span<const double> values, const KdeMarginal& marginal);

// Column (dimension d) of a sample set as a vector.
std::vector<double> dimension_values(const ErrorSampleSet& samples, std::size_t d);

}  // namespace ccd

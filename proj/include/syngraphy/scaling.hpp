#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syngraphy/statistics.hpp"

namespace syngraphy {

/// Statistics modelled by the empirical Gaussian: size first, then the six counts.
inline constexpr std::array<std::string_view, 7> kModelLabels = {"n", "m", "s", "z", "x", "t", "q"};

/// Multivariate normal over log10-transformed statistics of a corpus of networks.
struct GaussianModel {
  std::vector<std::string> labels;
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
  std::size_t corpus_size = 0;

  /// Fewer networks than dimensions + 1: the covariance is necessarily singular.
  bool degenerate() const { return corpus_size < labels.size() + 1; }

  /// Throws std::invalid_argument if the label is not modelled.
  std::size_t index_of(std::string_view label) const;
};

struct ExcludedNetwork {
  std::size_t index;   // position in the input list
  std::string reason;
};

struct FitResult {
  GaussianModel model;
  std::vector<ExcludedNetwork> excluded;
};

/// Fits mean and unbiased covariance of log10(values). Rows with a non-positive or
/// non-finite entry are excluded and reported. Throws std::invalid_argument when
/// fewer than two rows remain or a row has the wrong width.
FitResult fit_log_gaussian(std::vector<std::string> labels, std::span<const std::vector<double>> rows);

/// fit_log_gaussian over kModelLabels of each StatVector.
FitResult fit_model(std::span<const StatVector> corpus);

/// Versioned text form: a header with corpus size and labels, the mean row, then
/// one row per covariance line, all printed with 17 significant digits.
std::string write_model(const GaussianModel& model);

/// Inverse of write_model. Throws ParseError on malformed text.
GaussianModel read_model(std::string_view text);

enum class ScalingMethod { no, si };

/// Scaled-down counts the generator aims for, in CountIndex order.
struct TargetStats {
  std::size_t n_prime = 0;
  std::array<double, kNumCounts> targets{};
  ScalingMethod method = ScalingMethod::si;
};

/// Conditional-mean scaling in log10 space:
///   log a' = log a - (mu_n - log n') * Sigma_{a,n} / Sigma_{n,n}
/// A model with no variance in n returns the counts unchanged. Throws
/// NumericalError if Sigma_{n,n} <= 0 while the n column is not all zero, and std::invalid_argument if a
/// modelled count of `stats` is not positive or n_prime < 2.
TargetStats scale_no(const StatVector& stats, const GaussianModel& model, std::size_t n_prime);

/// Size-independent scaling: every count is multiplied by n'/n.
/// Throws std::invalid_argument if stats.n < 1 or n_prime < 2.
TargetStats scale_si(const StatVector& stats, std::size_t n_prime);

/// Expected counts of a graph with n nodes, average degree d, clustering c and
/// 4-clustering y, using the generalised binomial coefficient for real d.
struct ExpectedCounts {
  std::array<double, kNumCounts> values{};
  bool clamped = false;  // some binomial was negative (d < k - 1) and was set to 0
};
ExpectedCounts expected_counts(double d, double c, double y, double n);

}  // namespace syngraphy

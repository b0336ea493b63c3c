#include "syngraphy/scaling.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "syngraphy/error.hpp"

namespace syngraphy {
namespace {

constexpr std::string_view kModelMagic = "syngraphy-gaussian-model";
constexpr int kModelVersion = 1;

void check_n_prime(std::size_t n_prime) {
  if (n_prime < 2) throw std::invalid_argument("target node count must be at least 2");
}

double generalised_binomial(double d, int k, bool& clamped) {
  double value = 1.0;
  for (int i = 0; i < k; ++i) value *= (d - i) / (i + 1);
  if (value < 0.0) {
    clamped = true;
    return 0.0;
  }
  return value;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::size_t GaussianModel::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("model has no statistic '" + std::string(label) + "'");
}

FitResult fit_log_gaussian(std::vector<std::string> labels, std::span<const std::vector<double>> rows) {
  const auto k = static_cast<Eigen::Index>(labels.size());
  FitResult result;
  std::vector<Eigen::VectorXd> logs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != labels.size())
      throw std::invalid_argument("corpus row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                  " values, expected " + std::to_string(labels.size()));
    Eigen::VectorXd row(k);
    std::string reason;
    for (Eigen::Index j = 0; j < k; ++j) {
      const double v = rows[i][static_cast<std::size_t>(j)];
      const double lv = std::log10(v);
      if (!(v > 0.0) || !std::isfinite(lv)) {
        reason = "statistic " + labels[static_cast<std::size_t>(j)] + " = " + format_real(v) + " has no finite logarithm";
        break;
      }
      row(j) = lv;
    }
    if (reason.empty())
      logs.push_back(std::move(row));
    else
      result.excluded.push_back({i, std::move(reason)});
  }
  if (logs.size() < 2)
    throw std::invalid_argument("need at least two usable networks to fit a model, have " + std::to_string(logs.size()));

  const auto count = static_cast<double>(logs.size());
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(k);
  for (const auto& row : logs) mu += row;
  mu /= count;
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(k, k);
  for (const auto& row : logs) {
    const Eigen::VectorXd centred = row - mu;
    sigma += centred * centred.transpose();
  }
  sigma /= (count - 1.0);

  result.model = GaussianModel{std::move(labels), std::move(mu), std::move(sigma), logs.size()};
  return result;
}

FitResult fit_model(std::span<const StatVector> corpus) {
  std::vector<std::vector<double>> rows;
  rows.reserve(corpus.size());
  for (const auto& s : corpus) {
    rows.push_back({static_cast<double>(s.n), static_cast<double>(s.m), static_cast<double>(s.s),
                    static_cast<double>(s.z), static_cast<double>(s.x), static_cast<double>(s.t),
                    static_cast<double>(s.q)});
  }
  return fit_log_gaussian({kModelLabels.begin(), kModelLabels.end()}, rows);
}

std::string write_model(const GaussianModel& model) {
  std::string out;
  out += kModelMagic;
  out += ' ' + std::to_string(kModelVersion) + ' ' + std::to_string(model.corpus_size);
  for (const auto& label : model.labels) out += ' ' + label;
  out += '\n';
  auto row = [&](auto&& value_at) {
    for (std::size_t j = 0; j < model.labels.size(); ++j) {
      if (j > 0) out += ' ';
      out += format_real(value_at(static_cast<Eigen::Index>(j)));
    }
    out += '\n';
  };
  row([&](Eigen::Index j) { return model.mu(j); });
  for (Eigen::Index i = 0; i < model.sigma.rows(); ++i) row([&](Eigen::Index j) { return model.sigma(i, j); });
  return out;
}

GaussianModel read_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty model file");

  std::istringstream header(line);
  std::string magic;
  int version = 0;
  long long corpus_size = -1;
  if (!(header >> magic >> version >> corpus_size) || magic != kModelMagic)
    throw ParseError("not a syngraphy model file", 1);
  if (version != kModelVersion) throw ParseError("unsupported model version " + std::to_string(version), 1);
  if (corpus_size < 0) throw ParseError("negative corpus size", 1);

  GaussianModel model;
  model.corpus_size = static_cast<std::size_t>(corpus_size);
  for (std::string label; header >> label;) model.labels.push_back(label);
  if (model.labels.empty()) throw ParseError("model has no labels", 1);
  const auto k = static_cast<Eigen::Index>(model.labels.size());

  auto read_row = [&](std::size_t line_no) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of model file", line_no);
    std::istringstream fields(line);
    Eigen::VectorXd values(k);
    for (Eigen::Index j = 0; j < k; ++j)
      if (!(fields >> values(j))) throw ParseError("expected " + std::to_string(k) + " numbers", line_no);
    std::string extra;
    if (fields >> extra) throw ParseError("too many values", line_no);
    return values;
  };
  model.mu = read_row(2);
  model.sigma.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) model.sigma.row(i) = read_row(3 + static_cast<std::size_t>(i)).transpose();
  return model;
}

TargetStats scale_no(const StatVector& stats, const GaussianModel& model, std::size_t n_prime) {
  check_n_prime(n_prime);
  const std::size_t n_index = model.index_of("n");
  const double sigma_nn = model.sigma(static_cast<Eigen::Index>(n_index), static_cast<Eigen::Index>(n_index));
  const auto column = model.sigma.col(static_cast<Eigen::Index>(n_index));
  const bool flat = sigma_nn == 0.0 && column.isZero(0.0);
  if (!(sigma_nn > 0.0) && !flat) throw NumericalError("model covariance has an invalid n column");

  const double shift = model.mu(static_cast<Eigen::Index>(n_index)) - std::log10(static_cast<double>(n_prime));
  const CountVector counts = stats.counts();
  TargetStats out{n_prime, {}, ScalingMethod::no};
  for (std::size_t i = 0; i < kNumCounts; ++i) {
    const std::size_t a = model.index_of(kCountNames[i]);
    if (counts[i] <= 0)
      throw std::invalid_argument("statistic " + std::string(kCountNames[i]) +
                                  " must be positive for NO scaling, got " + std::to_string(counts[i]));
    const double ratio =
        flat ? 0.0 : model.sigma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(n_index)) / sigma_nn;
    out.targets[i] = std::pow(10.0, std::log10(static_cast<double>(counts[i])) - shift * ratio);
  }
  return out;
}

TargetStats scale_si(const StatVector& stats, std::size_t n_prime) {
  check_n_prime(n_prime);
  if (stats.n < 1) throw std::invalid_argument("input graph has no nodes");
  const double factor = static_cast<double>(n_prime) / static_cast<double>(stats.n);
  const CountVector counts = stats.counts();
  TargetStats out{n_prime, {}, ScalingMethod::si};
  for (std::size_t i = 0; i < kNumCounts; ++i) out.targets[i] = factor * static_cast<double>(counts[i]);
  return out;
}

ExpectedCounts expected_counts(double d, double c, double y, double n) {
  ExpectedCounts out;
  const double pairs = generalised_binomial(d, 2, out.clamped);
  out.values[kEdges] = d * n / 2.0;
  out.values[kWedges] = n * pairs;
  out.values[kClaws] = n * generalised_binomial(d, 3, out.clamped);
  out.values[kCrosses] = n * generalised_binomial(d, 4, out.clamped);
  out.values[kTriangles] = c / 3.0 * pairs * n;
  out.values[kSquares] = y / 4.0 * (d / 2.0) * (d - 1.0) * (d - 1.0) * n;
  return out;
}

}  // namespace syngraphy

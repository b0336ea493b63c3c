#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace syngraphy::cli {

/// Process exit codes.
enum ExitCode : int { kSuccess = 0, kUsage = 1, kIoError = 2, kNumericalFailure = 3 };

enum class Method { no, si, su, sn, fr, la };

/// Everything one summarize/baseline/sweep run needs.
struct RunConfig {
  Method method = Method::si;
  std::size_t n_prime = 80;
  double epsilon = 0.01;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k;  // explicit sample budget for su/sn
  std::filesystem::path model_path;
  std::filesystem::path input_path;
  std::filesystem::path out_dir = ".";
  std::string layout = "fr";
  std::size_t fr_iterations = 500;
  std::size_t max_iterations = 1'000'000;

  /// Throws std::invalid_argument when a method-specific requirement is missing.
  void validate() const;
};

std::string method_name(Method m);

/// Output files of one run, named <input-stem>.<method>.<n'>.<ext>.
struct RunOutputs {
  std::filesystem::path edges;        // .tsv
  std::filesystem::path drawing;      // .svg
  std::filesystem::path trace;        // .trace (generator methods only)
  std::filesystem::path coordinates;  // .coords.tsv
  std::size_t drawn_nodes = 0;
  std::optional<double> final_error;
};

/// Runs one summarization and writes its files. Messages go to `log`.
RunOutputs summarize(const RunConfig& config, std::ostream& log);

/// Runs summarize once per n', concurrently up to the SYNGRAPHY_THREADS cap.
/// Throws std::invalid_argument for an empty list.
std::vector<RunOutputs> sweep(const RunConfig& config, const std::vector<std::size_t>& n_primes, std::ostream& log);

/// Parses `args` (without the program name) and runs the subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syngraphy::cli

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "syngraphy/cli.hpp"
#include "syngraphy/graph.hpp"
#include "syngraphy/scaling.hpp"

using namespace syngraphy;
namespace fs = std::filesystem;
namespace fx = syngraphy::fixtures;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("syngraphy_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_graph(const fs::path& dir, const std::string& name, const Graph& g) {
  const fs::path path = dir / name;
  std::ofstream(path) << to_edge_list(g);
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("stats command") {
  const fs::path dir = scratch("stats");
  const auto triangle = write_graph(dir, "triangle.tsv", fx::complete(3));
  const auto square = write_graph(dir, "square.tsv", fx::cycle(4));

  const Invocation kv = invoke({"stats", triangle.string(), "--format", "kv"});
  REQUIRE(kv.code == 0);
  std::vector<std::string> keys;
  std::istringstream lines(kv.out);
  for (std::string line; std::getline(lines, line);) keys.push_back(line.substr(0, line.find('\t')));
  CHECK(keys == std::vector<std::string>{"n", "m", "s", "z", "x", "t", "q", "d", "c", "y", "b", "delta", "rho"});
  CHECK(kv.out.find("c\t1\n") != std::string::npos);
  CHECK(kv.out.find("y\tundefined\n") != std::string::npos);

  const Invocation js = invoke({"stats", square.string(), "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["q"] == 1);
  CHECK(doc["y"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["b"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["c"].get<double>() == 0.0);
  CHECK(doc["rho"] == "undefined");

  const Invocation both = invoke({"stats", triangle.string()});
  CHECK(both.out.rfind(kv.out + "\n{", 0) == 0);

  CHECK(invoke({"stats", (dir / "missing.tsv").string()}).code == cli::kIoError);
  CHECK(invoke({"stats", triangle.string(), "--format", "xml"}).code == cli::kUsage);
  CHECK(invoke({}).code == cli::kUsage);
}

TEST_CASE("fit command writes a readable model") {
  const fs::path dir = scratch("fit");
  fs::create_directories(dir / "corpus");
  for (int i = 0; i < 12; ++i)
    write_graph(dir / "corpus", "g" + std::to_string(i) + ".tsv", erdos_renyi(30 + 10 * i, 0.2, i));
  std::ofstream(dir / "corpus" / "broken.tsv") << "lonely\n";
  const Invocation r = invoke({"fit", (dir / "corpus").string(), "-o", (dir / "model.txt").string()});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("excluded broken.tsv") != std::string::npos);
  const GaussianModel model = read_model(slurp(dir / "model.txt"));
  CHECK(model.corpus_size == 12);
  CHECK(model.labels == std::vector<std::string>(kModelLabels.begin(), kModelLabels.end()));
}

TEST_CASE("summarize with size-independent scaling") {
  const fs::path dir = scratch("si");
  const auto input = write_graph(dir, "big.tsv", erdos_renyi(1000, 0.006, 3));
  const std::vector<std::string> args{"summarize", input.string(), "--method", "si", "--seed", "9",
                                      "--out-dir",  (dir / "a").string()};
  const Invocation first = invoke(args);
  REQUIRE(first.code == 0);
  CHECK(first.err.empty());
  const Graph summary = read_edge_list((dir / "a" / "big.si.80.tsv").string());
  CHECK(summary.node_count() <= 80);
  CHECK(fs::exists(dir / "a" / "big.si.80.svg"));
  CHECK(fs::exists(dir / "a" / "big.si.80.trace"));
  CHECK(fs::exists(dir / "a" / "big.si.80.coords.tsv"));

  std::vector<std::string> again = args;
  again.back() = (dir / "b").string();
  REQUIRE(invoke(again).code == 0);
  for (const char* name : {"big.si.80.tsv", "big.si.80.svg", "big.si.80.trace", "big.si.80.coords.tsv"})
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));

  const Invocation unseeded = invoke({"summarize", input.string(), "--out-dir", (dir / "c").string(), "--n-prime", "10"});
  CHECK(unseeded.code == 0);
  CHECK(unseeded.err.rfind("seed: ", 0) == 0);
}

TEST_CASE("summarize with the log-normal model") {
  const fs::path dir = scratch("no");
  GaussianModel model;
  model.labels.assign(kModelLabels.begin(), kModelLabels.end());
  model.mu = Eigen::VectorXd::Constant(7, 2.0);
  model.sigma = Eigen::MatrixXd::Identity(7, 7);
  model.corpus_size = 10;
  std::ofstream(dir / "model.txt") << write_model(model);
  const auto input = write_graph(dir, "g.tsv", erdos_renyi(20, 0.3, 1));
  const std::vector<std::string> args{"summarize", input.string(), "--method", "no", "--model",
                                      (dir / "model.txt").string(), "--n-prime", "20", "--seed", "1",
                                      "--out-dir", dir.string()};
  const Invocation r = invoke(args);
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "g.no.20.trace"));

  // Covariance with n but no variance in n is not a valid model.
  model.sigma(0, 0) = 0.0;
  model.sigma(1, 0) = model.sigma(0, 1) = 0.5;
  std::ofstream(dir / "model.txt") << write_model(model);
  CHECK(invoke(args).code == cli::kNumericalFailure);

  CHECK(invoke({"summarize", input.string(), "--method", "no", "--seed", "1"}).code == cli::kUsage);
}

TEST_CASE("baseline and drawing commands") {
  const fs::path dir = scratch("baseline");
  const auto input = write_graph(dir, "g.tsv", erdos_renyi(300, 0.02, 4));
  const Invocation su = invoke({"baseline", input.string(), "--method", "su", "--k", "5", "--seed", "2",
                                "--out-dir", dir.string()});
  REQUIRE(su.code == 0);
  CHECK(fs::exists(dir / "g.su.80.svg"));
  const Invocation sn = invoke({"baseline", input.string(), "--method", "sn", "--n-prime", "40", "--seed", "2",
                                "--out-dir", dir.string()});
  REQUIRE(sn.code == 0);
  CHECK(read_edge_list((dir / "g.sn.40.tsv").string()).node_count() <= 40);
  CHECK(invoke({"baseline", input.string(), "--method", "si"}).code == cli::kUsage);

  const Invocation coords = invoke({"layout", input.string(), "--seed", "3", "-o", (dir / "g.coords").string()});
  REQUIRE(coords.code == 0);
  const Invocation svg = invoke({"render", input.string(), "--coords", (dir / "g.coords").string()});
  REQUIRE(svg.code == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  const Invocation direct = invoke({"render", input.string(), "--seed", "3"});
  CHECK(direct.out == svg.out);

  const auto split = write_graph(dir, "split.tsv", Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}}));
  const Invocation la = invoke({"layout", split.string(), "--layout", "la", "--seed", "1"});
  REQUIRE(la.code == 0);
  CHECK(la.err.find("largest component") != std::string::npos);
}

TEST_CASE("sweep command") {
  const fs::path dir = scratch("sweep");
  const auto input = write_graph(dir, "g.tsv", erdos_renyi(400, 0.02, 6));
  const Invocation r = invoke({"sweep", input.string(), "--n-primes", "10,80,200", "--seed", "5",
                               "--out-dir", dir.string(), "--max-iterations", "20000"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::size_t> sizes;
  for (std::string line; std::getline(lines, line);) sizes.push_back(std::stoul(line.substr(line.find('\t') + 1)));
  CHECK(sizes == std::vector<std::size_t>{10, 80, 200});
  CHECK(invoke({"sweep", input.string(), "--n-primes", ",", "--seed", "5"}).code == cli::kUsage);
  CHECK(invoke({"sweep", input.string(), "--n-primes", "1", "--seed", "5"}).code == cli::kUsage);
}

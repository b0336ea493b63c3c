#include "syngraphy/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "syngraphy/baselines.hpp"
#include "syngraphy/error.hpp"
#include "syngraphy/generator.hpp"
#include "syngraphy/graph.hpp"
#include "syngraphy/layout.hpp"
#include "syngraphy/render.hpp"
#include "syngraphy/scaling.hpp"
#include "syngraphy/statistics.hpp"

namespace syngraphy::cli {
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Size and subgraph counts only; enough for scaling and fitting.
StatVector count_stats(const Graph& g) {
  StatVector s;
  s.n = static_cast<Count>(g.node_count());
  const CountVector c = subgraph_counts(g);
  s.m = c[kEdges];
  s.s = c[kWedges];
  s.z = c[kClaws];
  s.x = c[kCrosses];
  s.t = c[kTriangles];
  s.q = c[kSquares];
  s.d = s.n > 0 ? 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n) : 0.0;
  return s;
}

Method parse_method(const std::string& name) {
  if (name == "no") return Method::no;
  if (name == "si") return Method::si;
  if (name == "su") return Method::su;
  if (name == "sn") return Method::sn;
  if (name == "fr") return Method::fr;
  if (name == "la") return Method::la;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::size_t thread_cap() {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SYNGRAPHY_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value >= 1) cap = static_cast<std::size_t>(value);
  }
  return cap;
}

struct Drawing {
  Graph graph;
  Layout layout;
};

// Lays out g with the configured algorithm; the Laplacian layout draws the largest component only.
Drawing draw(const Graph& g, const RunConfig& config, std::ostream& log) {
  if (config.layout == "la") {
    Graph core = largest_component(g).graph;
    if (core.node_count() != g.node_count())
      log << "note: Laplacian layout draws the largest component (" << core.node_count() << " of "
          << g.node_count() << " nodes)\n";
    Layout layout = laplacian_embedding(core, config.seed);
    return {std::move(core), std::move(layout)};
  }
  FrOptions options;
  options.iterations = config.fr_iterations;
  Layout layout = fruchterman_reingold(g, config.seed, options);
  return {g, std::move(layout)};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NumericalError*>(&e)) return kNumericalFailure;
  if (dynamic_cast<const std::logic_error*>(&e)) return kUsage;
  return kIoError;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long long value = std::stoull(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad n' value '" + item + "'");
    out.push_back(static_cast<std::size_t>(value));
  }
  return out;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::no: return "no";
    case Method::si: return "si";
    case Method::su: return "su";
    case Method::sn: return "sn";
    case Method::fr: return "fr";
    case Method::la: return "la";
  }
  return "?";
}

void RunConfig::validate() const {
  if (method == Method::no && model_path.empty()) throw std::invalid_argument("method no requires --model");
  if ((method == Method::no || method == Method::si) && n_prime < 2)
    throw std::invalid_argument("--n-prime must be at least 2");
  if ((method == Method::su || method == Method::sn) && !k && n_prime < 1)
    throw std::invalid_argument("sampling methods need --k or --n-prime");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("--epsilon must lie in (0,1)");
  if (layout != "fr" && layout != "la") throw std::invalid_argument("--layout must be fr or la");
}

RunOutputs summarize(const RunConfig& config, std::ostream& log) {
  config.validate();
  const Graph input = read_edge_list(config.input_path.string());
  RunOutputs outputs;

  Graph result;
  std::string trace;
  std::size_t size_tag = config.n_prime;
  switch (config.method) {
    case Method::no:
    case Method::si: {
      const StatVector stats = count_stats(input);
      const TargetStats targets = config.method == Method::si
                                      ? scale_si(stats, config.n_prime)
                                      : scale_no(stats, read_model(read_file(config.model_path)), config.n_prime);
      GeneratorConfig gen;
      gen.epsilon = config.epsilon;
      gen.n_prime = config.n_prime;
      gen.seed = config.seed;
      gen.max_iterations = config.max_iterations;
      GenerateResult generated = generate(targets, gen);
      if (generated.hit_iteration_cap) log << "warning: generator stopped at the iteration cap\n";
      outputs.final_error = generated.error;
      trace = format_trace(generated.trace);
      result = std::move(generated.graph);
      break;
    }
    case Method::su: {
      const std::size_t k = config.k ? *config.k : uniform_vertex_budget(input, config.n_prime);
      result = uniform_vertex_sample(input, k, config.seed).graph;
      break;
    }
    case Method::sn: {
      const std::size_t k = config.k ? *config.k : node_sample_budget(input, config.n_prime);
      result = node_sample(input, k, config.seed).graph;
      break;
    }
    case Method::fr:
    case Method::la:
      result = input;
      size_tag = input.node_count();
      break;
  }

  RunConfig draw_config = config;
  if (config.method == Method::fr) draw_config.layout = "fr";
  if (config.method == Method::la) draw_config.layout = "la";
  const Drawing drawing = draw(result, draw_config, log);

  fs::create_directories(config.out_dir);
  const std::string base =
      config.input_path.stem().string() + "." + method_name(config.method) + "." + std::to_string(size_tag);
  outputs.edges = config.out_dir / (base + ".tsv");
  outputs.drawing = config.out_dir / (base + ".svg");
  outputs.coordinates = config.out_dir / (base + ".coords.tsv");
  write_file(outputs.edges, to_edge_list(result));
  write_file(outputs.drawing, render_svg(drawing.graph, drawing.layout));
  write_file(outputs.coordinates, format_coordinates(drawing.graph, drawing.layout));
  if (!trace.empty()) {
    outputs.trace = config.out_dir / (base + ".trace");
    write_file(outputs.trace, trace);
  }
  outputs.drawn_nodes = drawing.graph.node_count();
  return outputs;
}

std::vector<RunOutputs> sweep(const RunConfig& config, const std::vector<std::size_t>& n_primes, std::ostream& log) {
  if (n_primes.empty()) throw std::invalid_argument("sweep needs at least one n' value");
  config.validate();

  std::vector<RunOutputs> results(n_primes.size());
  std::vector<std::string> logs(n_primes.size());
  std::vector<std::exception_ptr> failures(n_primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n_primes.size(); i = next++) {
      std::ostringstream job_log;
      try {
        RunConfig job = config;
        job.n_prime = n_primes[i];
        results[i] = summarize(job, job_log);
      } catch (...) {
        failures[i] = std::current_exception();
      }
      logs[i] = job_log.str();
    }
  };
  const std::size_t threads = std::min(thread_cap(), n_primes.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < n_primes.size(); ++i) {
    log << logs[i];
    if (failures[i]) std::rethrow_exception(failures[i]);
  }
  return results;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Summarise a large graph by a small synthetic graph with matching statistics", "syngraphy"};
  app.require_subcommand(1);

  RunConfig config;
  std::string method = "si";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k;
  std::string input, output, coords, n_prime_list, corpus_dir;
  std::string format = "both";

  auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "RNG seed (random and reported when omitted)"); };
  auto add_layout = [&](CLI::App* cmd) {
    cmd->add_option("--layout", config.layout, "Layout algorithm: fr or la")->check(CLI::IsMember({"fr", "la"}));
    cmd->add_option("--iterations", config.fr_iterations, "Fruchterman-Reingold iterations");
  };
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Edge-list file")->required();
    cmd->add_option("--n-prime", config.n_prime, "Node count of the summary graph");
    cmd->add_option("--epsilon", config.epsilon, "Convergence parameter");
    cmd->add_option("--model", config.model_path, "Gaussian model file (method no)");
    cmd->add_option("--k", k, "Sample budget (methods su, sn)");
    cmd->add_option("--out-dir", config.out_dir, "Output directory");
    cmd->add_option("--max-iterations", config.max_iterations, "Generator iteration cap");
    add_seed(cmd);
    add_layout(cmd);
  };

  auto* stats_cmd = app.add_subcommand("stats", "Print the statistics of a graph");
  stats_cmd->add_option("input", input, "Edge-list file")->required();
  stats_cmd->add_option("--format", format, "kv, json or both")->check(CLI::IsMember({"kv", "json", "both"}));

  auto* fit_cmd = app.add_subcommand("fit", "Fit the log-normal statistics model to a directory of edge lists");
  fit_cmd->add_option("corpus", corpus_dir, "Directory of edge-list files")->required();
  fit_cmd->add_option("-o,--output", output, "Model file to write")->required();

  auto* summarize_cmd = app.add_subcommand("summarize", "Summarise a graph and draw the summary");
  add_run_options(summarize_cmd);
  summarize_cmd->add_option("--method", method, "no, si, su, sn, fr or la")
      ->check(CLI::IsMember({"no", "si", "su", "sn", "fr", "la"}));

  auto* baseline_cmd = app.add_subcommand("baseline", "Draw a vertex sample of a graph");
  add_run_options(baseline_cmd);
  baseline_cmd->add_option("--method", method, "su or sn")->required()->check(CLI::IsMember({"su", "sn"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Summarise a graph once per n'");
  add_run_options(sweep_cmd);
  sweep_cmd->add_option("--method", method, "no or si")->check(CLI::IsMember({"no", "si"}));
  sweep_cmd->add_option("--n-primes", n_prime_list, "Comma-separated n' values")->required();

  auto* layout_cmd = app.add_subcommand("layout", "Write node coordinates for a graph");
  layout_cmd->add_option("input", input, "Edge-list file")->required();
  layout_cmd->add_option("-o,--output", output, "Coordinate file (stdout when omitted)");
  add_seed(layout_cmd);
  add_layout(layout_cmd);

  auto* render_cmd = app.add_subcommand("render", "Draw a graph as SVG");
  render_cmd->add_option("input", input, "Edge-list file")->required();
  render_cmd->add_option("--coords", coords, "Coordinate file from `layout` (computed when omitted)");
  render_cmd->add_option("-o,--output", output, "SVG file (stdout when omitted)");
  add_seed(render_cmd);
  add_layout(render_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto resolve_seed = [&] {
    if (seed) return *seed;
    const std::uint64_t drawn = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    err << "seed: " << drawn << '\n';
    return drawn;
  };

  try {
    if (stats_cmd->parsed()) {
      const StatVector stats = full_stat_vector(read_edge_list(input));
      if (format != "json") out << to_key_value(stats);
      if (format == "both") out << '\n';
      if (format != "kv") out << to_json(stats) << '\n';
      return kSuccess;
    }

    if (fit_cmd->parsed()) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::vector<StatVector> corpus;
      std::vector<fs::path> used;
      for (const auto& file : files) {
        try {
          corpus.push_back(count_stats(read_edge_list(file.string())));
          used.push_back(file);
        } catch (const std::exception& e) {
          err << "excluded " << file.filename().string() << ": " << e.what() << '\n';
        }
      }
      const FitResult fit = fit_model(corpus);
      for (const auto& ex : fit.excluded) err << "excluded " << used[ex.index].filename().string() << ": " << ex.reason << '\n';
      if (fit.model.degenerate())
        err << "warning: " << fit.model.corpus_size << " networks for " << fit.model.labels.size()
            << " statistics; covariance is singular\n";
      write_file(output, write_model(fit.model));
      out << "fitted " << fit.model.corpus_size << " networks -> " << output << '\n';
      return kSuccess;
    }

    if (layout_cmd->parsed() || render_cmd->parsed()) {
      config.seed = resolve_seed();
      const Graph g = read_edge_list(input);
      Drawing drawing = coords.empty() ? draw(g, config, err) : Drawing{g, parse_coordinates(g, read_file(coords))};
      const std::string text = layout_cmd->parsed() ? format_coordinates(drawing.graph, drawing.layout)
                                                    : render_svg(drawing.graph, drawing.layout);
      if (output.empty())
        out << text;
      else
        write_file(output, text);
      return kSuccess;
    }

    config.method = parse_method(method);
    config.input_path = input;
    config.k = k;
    config.seed = resolve_seed();

    if (sweep_cmd->parsed()) {
      const auto results = sweep(config, parse_size_list(n_prime_list), err);
      for (const auto& r : results) out << r.drawing.string() << '\t' << r.drawn_nodes << '\n';
      return kSuccess;
    }

    const RunOutputs r = summarize(config, err);
    out << "edges\t" << r.edges.string() << '\n';
    out << "drawing\t" << r.drawing.string() << '\n';
    out << "coordinates\t" << r.coordinates.string() << '\n';
    if (!r.trace.empty()) out << "trace\t" << r.trace.string() << '\n';
    if (r.final_error) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", *r.final_error);
      out << "error\t" << buf << '\n';
    }
    return kSuccess;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace syngraphy::cli

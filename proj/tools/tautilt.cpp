// Command-line front end. Exit codes: 0 success, 1 input error,
// 2 truncated enumeration, 3 a checked statement failed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tautilt/algebra.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/report.hpp"
#include "tautilt/stability.hpp"
#include "tautilt/tau_tilting.hpp"
#include "tautilt/wallchamber.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kTruncated = 2;
constexpr int kViolation = 3;

struct RunConfig {
  std::string algebra_path;
  std::string command;
  std::string format;
  std::size_t max_nodes = 10000;
  int max_dim = 30;
  int prime = 2;
  std::uint64_t seed = 0;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tautilt::InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw tautilt::InputError("cannot write " + cfg.output);
  out << text;
}

std::string default_format(const std::string& command) {
  if (command == "info") return "table";
  if (command == "graph") return "dot";
  return "json";
}

bool format_allowed(const std::string& command, const std::string& format) {
  if (command == "info" || command == "enumerate") return format == "json" || format == "table";
  if (command == "verify") return format == "json";
  if (command == "fan") return format == "json" || format == "svg";
  return format == "dot";
}

int run(const RunConfig& cfg) {
  const tautilt::BoundQuiver q = tautilt::parse_algebra(read_file(cfg.algebra_path));
  if (cfg.command == "info") {
    write_output(cfg, cfg.format == "json" ? tautilt::info_json(q) : tautilt::info_text(q));
    return kOk;
  }
  const tautilt::Context ctx(q, cfg.seed);
  const tautilt::ExchangeGraph graph =
      tautilt::enumerate_exchange_graph(ctx, tautilt::EnumerationLimits{cfg.max_nodes, cfg.max_dim});
  const int done = graph.complete ? kOk : kTruncated;
  if (!graph.complete) std::cerr << "truncated: " << graph.truncation_reason << "\n";
  tautilt::BruteForceBudget budget;
  budget.prime = cfg.prime;

  if (cfg.command == "verify") {
    tautilt::VerifyOptions options;
    options.budget = budget;
    options.seed = cfg.seed;
    const tautilt::VerificationReport report = tautilt::verify_algebra(ctx, graph, options);
    write_output(cfg, tautilt::verification_json(q, graph, report));
    bool pairs_ok = true;
    for (const auto& p : report.pairs) pairs_ok = pairs_ok && p.passed();
    bool theorems_ok = pairs_ok;
    for (const auto& c : report.global)
      if (c.name != "exchange_graph_complete" && c.name != "regular_connected" && c.name != "c_vector_duality")
        theorems_ok = theorems_ok && c.passed;
    if (graph.complete)
      for (const auto& c : report.global) theorems_ok = theorems_ok && c.passed;
    return theorems_ok ? done : kViolation;
  }

  const std::vector<tautilt::BrickSlate> slates = tautilt::all_slates(ctx, graph);
  if (cfg.command == "enumerate") {
    write_output(cfg, cfg.format == "table" ? tautilt::enumerate_table(q, graph, slates)
                                            : tautilt::enumerate_json(q, graph, slates));
    return done;
  }
  if (cfg.command == "graph") {
    write_output(cfg, tautilt::emit_dot(q, graph, slates));
    return done;
  }
  const tautilt::Fan fan = tautilt::build_fan(q, graph, slates, budget);
  write_output(cfg, cfg.format == "svg" ? tautilt::emit_svg_stereographic(q, graph, fan)
                                        : tautilt::emit_fan_json(q, graph, fan));
  return done;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tau-tilting engine for bound quiver algebras"};
  RunConfig cfg;
  app.add_option("file", cfg.algebra_path, "algebra file")->required();
  app.add_option("command", cfg.command, "info | enumerate | verify | fan | graph")
      ->required()
      ->check(CLI::IsMember({"info", "enumerate", "verify", "fan", "graph"}));
  app.add_option("--format", cfg.format, "json | dot | svg | table");
  app.add_option("--max-nodes", cfg.max_nodes, "node cap for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--max-dim", cfg.max_dim, "dimension cap for modules met during enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--prime", cfg.prime, "field size for the brute-force stability oracle");
  app.add_option("--seed", cfg.seed, "seed for randomized steps");
  app.add_option("-o,--output", cfg.output, "output path (default stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (cfg.format.empty()) cfg.format = default_format(cfg.command);
  if (!format_allowed(cfg.command, cfg.format)) {
    std::cerr << "format " << cfg.format << " is not available for " << cfg.command << "\n";
    return kInputError;
  }
  if (!tautilt::is_prime(cfg.prime)) {
    std::cerr << cfg.prime << " is not prime\n";
    return kInputError;
  }
  try {
    return run(cfg);
  } catch (const tautilt::TheoremViolation& e) {
    nlohmann::ordered_json w;
    w["check"] = e.check();
    w["witness"] = e.witness();
    std::cerr << w.dump(2) << "\n";
    return kViolation;
  } catch (const tautilt::LimitExceeded& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kTruncated;
  } catch (const tautilt::ParseError& e) {
    std::cerr << cfg.algebra_path << ": " << e.what() << "\n";
    return kInputError;
  } catch (const tautilt::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tautilt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
}

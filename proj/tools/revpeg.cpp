// revpeg: classify, solve and verify reversible peg solitaire on graphs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "revpeg/cli.hpp"

using namespace revpeg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(1, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible peg solitaire on graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalOptions global;
  std::string format = "json";
  std::string budget = "2G";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--memory-budget", budget, "Oracle state-table budget, e.g. 512M or 2G")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads for census")->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for sampled graphs")->capture_default_str();
  app.add_flag("--timing", global.timing, "Include wall-clock time in the report");

  std::string graph_spec;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_spec, "Family (path:7, cycle:8, star:5, doublestar:2,3, complete:4, paw, H) or edge-list file")
        ->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a graph with every applicable method");
  add_graph(classify_cmd);

  int hole = 1;
  std::optional<int> target;
  std::string method = "oracle";
  bool trace = false;
  auto* solve_cmd = app.add_subcommand("solve", "Produce and replay a witness from a one-hole start");
  add_graph(solve_cmd);
  solve_cmd->add_option("--hole", hole, "Starting hole")->required();
  solve_cmd->add_option("--target", target, "Required final peg");
  solve_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"oracle", "constructive", "min-unjumps"}))
      ->capture_default_str();
  solve_cmd->add_flag("--trace", trace, "Include the configuration after each move");

  std::string witness_path;
  std::optional<int> verify_hole;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a witness file");
  verify_cmd->add_option("witness", witness_path, "JSON move sequence")->required();
  add_graph(verify_cmd);
  verify_cmd->add_option("--hole", verify_hole, "Start hole when the witness has none");

  std::string family = "path";
  int table_max_n = 12;
  int oracle_max_n = 20;
  auto* table_cmd = app.add_subcommand("table", "Closed-form path or cycle table with oracle check");
  table_cmd->add_option("--family", family)->check(CLI::IsMember({"path", "cycle"}))->capture_default_str();
  table_cmd->add_option("--max-n", table_max_n)->check(CLI::Range(2, 64))->capture_default_str();
  table_cmd->add_option("--oracle-max-n", oracle_max_n, "Largest n checked against the oracle")->capture_default_str();

  CensusOptions census;
  std::vector<int> n_range;
  auto* census_cmd = app.add_subcommand("census", "Cross-check all small graphs plus random samples");
  census_cmd->add_option("--max-n", census.max_n)->check(CLI::Range(2, 8))->capture_default_str();
  census_cmd->add_option("--samples", census.samples)->check(CLI::NonNegativeNumber)->capture_default_str();
  census_cmd->add_option("--n-range", n_range, "Size range for samples, e.g. --n-range 7 14")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::exit_code::kOk : cli::exit_code::kUsage;
  }

  try {
    global.format = format == "text" ? cli::Format::Text : cli::Format::Json;
    global.oracle.memory_budget = cli::parse_bytes(budget);
    if (global.threads == 0) global.threads = std::max(1u, std::thread::hardware_concurrency());

    cli::RunReport report;
    if (*classify_cmd) {
      report = cli::cmd_classify(graph_spec, global);
    } else if (*solve_cmd) {
      const auto m = method == "oracle"         ? cli::SolveMethod::Oracle
                     : method == "constructive" ? cli::SolveMethod::Constructive
                                                : cli::SolveMethod::MinUnjumps;
      report = cli::cmd_solve(graph_spec, hole, target, m, trace, global);
    } else if (*verify_cmd) {
      report = cli::cmd_verify(read_file(witness_path), graph_spec, verify_hole, global);
    } else if (*table_cmd) {
      report = cli::cmd_table(family == "path" ? cli::Family::Path : cli::Family::Cycle, table_max_n, oracle_max_n,
                              global);
    } else {
      census.seed = global.seed;
      census.threads = global.threads;
      census.check.oracle = global.oracle;
      if (!n_range.empty()) {
        census.sample_min_n = n_range[0];
        census.sample_max_n = n_range[1];
        if (census.sample_min_n < 4 || census.sample_min_n > census.sample_max_n || census.sample_max_n > 64)
          throw ValidationError("--n-range must satisfy 4 <= lo <= hi <= 64");
      }
      report = cli::cmd_census(census, global);
    }
    std::cout << cli::render(report.body, global.format);
    return report.exit_code;
  } catch (const CapacityExceeded& e) {
    std::cerr << "revpeg: capacity exceeded: " << e.what() << '\n';
    return cli::exit_code::kCapacity;
  } catch (const InvariantViolation& e) {
    std::cerr << "revpeg: " << e.what() << '\n';
    return cli::exit_code::kMismatch;
  } catch (const IllegalMove& e) {
    std::cerr << "revpeg: " << e.what() << '\n';
    return cli::exit_code::kMismatch;
  } catch (const Error& e) {
    std::cerr << "revpeg: " << e.what() << '\n';
    return cli::exit_code::kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "revpeg: bad JSON: " << e.what() << '\n';
    return cli::exit_code::kUsage;
  }
}

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "hypermap_cli.hpp"

namespace {

using hypermap::cli::Command;
using hypermap::cli::Format;
using hypermap::cli::Method;
using hypermap::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& threads) {
  sub->add_option("--r", cfg.r, "Number of darts");
  sub->add_option("--r-min", cfg.r_min, "First r of a range");
  sub->add_option("--r-max", cfg.r_max, "Last r of a range");
  sub->add_option("--faces", cfg.faces, "Number of faces (1 or 2)")->check(CLI::IsMember({1U, 2U}));
  sub->add_option("--method", cfg.method, "enumerate | closed | recursion")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Method>{
              {"enumerate", Method::kEnumerate}, {"closed", Method::kClosed}, {"recursion", Method::kRecursion}},
          CLI::ignore_case));
  sub->add_option("--format", cfg.format, "text | csv | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}},
          CLI::ignore_case));
  sub->add_option("--out", cfg.output_path, "Write output to this file instead of stdout");
  sub->add_option("--threads", threads, "Worker threads for enumeration, or 'auto'");
  sub->add_option("--enum-ceiling", cfg.enum_ceiling, "Largest r the enumerative method accepts")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--force", cfg.force, "Enumerate beyond the ceiling (with a warning)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating polynomials for rooted one- and two-face hypermaps"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string threads = "auto";
  const std::pair<const char*, Command> commands[] = {
      {"poly", Command::kPoly},         {"table", Command::kTable},         {"count", Command::kCount},
      {"stirling", Command::kStirling}, {"avg-trace", Command::kAvgTrace}, {"verify", Command::kVerify},
      {"bench", Command::kBench},
  };
  const char* descriptions[] = {
      "Print the generating polynomial",
      "Print the coefficient table h_r(e, v)",
      "Count rooted hypermaps",
      "Unsigned Stirling numbers of the first kind",
      "Exact mean of Tr[rho_A^r] over random pure states",
      "Cross-validate all methods and identities",
      "Time the enumerative and closed-form methods (CSV)",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    add_common(sub, cfg, threads);
    const Command command = commands[i].second;
    sub->callback([&cfg, command] { cfg.command = command; });
    if (command == Command::kAvgTrace) {
      sub->add_option("--m", cfg.m, "Dimension of subsystem A")->required();
      sub->add_option("--n", cfg.n, "Dimension of subsystem B")->required();
    }
    if (command == Command::kBench) {
      sub->add_option("--reps", cfg.repetitions, "Timed repetitions per point (median reported)");
    }
  }

  CLI11_PARSE(app, argc, argv);

  if (threads != "auto") {
    try {
      const long t = std::stol(threads);
      if (t <= 0) throw std::out_of_range("threads");
      cfg.threads = static_cast<unsigned>(t);
    } catch (const std::exception&) {
      std::cerr << "error: --threads must be a positive integer or 'auto'\n";
      return 2;
    }
  }

  const auto result = hypermap::cli::run(cfg);
  std::cerr << result.err;
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << *cfg.output_path << "\n";
      return 2;
    }
    file << result.out;
  } else {
    std::cout << result.out;
  }
  return result.exit_code;
}

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "censpred/numerics.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

using censpred::cli::AnalysisConfig;
using censpred::cli::CommandResult;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

void add_common_flags(CLI::App* cmd, AnalysisConfig& cfg) {
  cmd->add_option("--config", [](const std::vector<std::string>&) {
    return true;  // consumed during the pre-scan
  }, "JSON config file; explicit flags override its fields");
  cmd->add_option("--data", cfg.data_path, "input data file (CSV)");
  cmd->add_option("--n", cfg.n, "total sample size");
  cmd->add_option("--m", cfg.m, "number of observed order statistics");
  cmd->add_option("--r", cfg.r, "first future order statistic index");
  cmd->add_option("--s", cfg.s, "second future order statistic index");
  cmd->add_option("--next", cfg.next_n, "predict the next N spacings");
  cmd->add_option("--alpha", cfg.alpha, "prior shape (0 with beta=0: 1/theta)");
  cmd->add_option("--beta", cfg.beta, "prior rate");
  cmd->add_option("--lambda", cfg.lambda, "1 - credibility");
  cmd->add_option("--grid", cfg.grid_size, "band grid size");
  cmd->add_option("--seed", cfg.seed, "master seed");
  cmd->add_option("--theta", cfg.thetas, "theta grid (repeatable)");
  cmd->add_option("--trials", cfg.trials, "Monte Carlo trials");
  cmd->add_option("--inner", cfg.inner_draws, "inner draws per KL trial");
  cmd->add_option("--out", cfg.out_path,
                  "output prefix (<out>.json, <out>.csv)");
  cmd->add_option("--svg", cfg.svg_path, "SVG output path");
  cmd->add_option("--at", cfg.at_points,
                  "evaluation point, comma-separated (repeatable)");
}

int emit(const CommandResult& result, const AnalysisConfig& cfg) {
  std::cout << result.table;
  if (!cfg.out_path.empty()) {
    write_file(cfg.out_path + ".json", result.json);
    if (!result.csv.empty()) write_file(cfg.out_path + ".csv", result.csv);
  } else {
    std::cout << result.json;
  }
  if (!result.svg.empty()) {
    std::string svg_path = cfg.svg_path;
    if (svg_path.empty() && !cfg.out_path.empty())
      svg_path = cfg.out_path + ".svg";
    if (!svg_path.empty()) {
      write_file(svg_path, result.svg);
      if (!result.svg_secondary.empty()) {
        const auto dot = svg_path.rfind(".svg");
        const std::string base =
            dot == std::string::npos ? svg_path : svg_path.substr(0, dot);
        write_file(base + "-os.svg", result.svg_secondary);
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "censpred: exact Bayesian prediction regions for future order "
      "statistics of type-II censored exponential lifetimes"};
  app.require_subcommand(1);

  AnalysisConfig cfg;
  // a --config file provides defaults; flags parsed afterwards override it
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        censpred::cli::load_config_file(cfg, argv[i + 1]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  }

  std::function<CommandResult()> action;
  auto wire = [&](const char* name, const char* help,
                  CommandResult (*fn)(const AnalysisConfig&)) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_flags(cmd, cfg);
    cmd->callback([&action, fn, &cfg] {
      action = [fn, &cfg] { return fn(cfg); };
    });
  };
  wire("hpd", "closed-form HPD region for the next-N spacings",
       censpred::cli::run_hpd);
  wire("region2d", "two-step band region for a pair of future order statistics",
       censpred::cli::run_region2d);
  wire("coverage", "Monte Carlo frequentist coverage of the regions",
       censpred::cli::run_coverage);
  wire("klrisk", "Monte Carlo Kullback-Leibler risk of predictive densities",
       censpred::cli::run_klrisk);
  wire("density", "pointwise predictive density evaluation",
       censpred::cli::run_density);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return emit(action(), cfg);
  } catch (const censpred::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

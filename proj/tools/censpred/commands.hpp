#ifndef CENSPRED_TOOLS_COMMANDS_HPP
#define CENSPRED_TOOLS_COMMANDS_HPP

#include <string>

#include "config.hpp"

namespace censpred::cli {

/// Everything a subcommand produces; main() decides what lands on stdout
/// and what goes to files. All strings are deterministic functions of
/// (config, input file, seed).
struct CommandResult {
  std::string table;          // human-readable summary, 4 decimals
  std::string json;           // full double precision
  std::string csv;            // reports only
  std::string svg;            // spacing frame (or half-space), optional
  std::string svg_secondary;  // order-statistic frame, optional
};

CommandResult run_hpd(const AnalysisConfig& cfg);
CommandResult run_region2d(const AnalysisConfig& cfg);
CommandResult run_coverage(const AnalysisConfig& cfg);
CommandResult run_klrisk(const AnalysisConfig& cfg);
CommandResult run_density(const AnalysisConfig& cfg);

}  // namespace censpred::cli

#endif  // CENSPRED_TOOLS_COMMANDS_HPP

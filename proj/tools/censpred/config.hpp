#ifndef CENSPRED_TOOLS_CONFIG_HPP
#define CENSPRED_TOOLS_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace censpred::cli {

/// One bag of settings for every subcommand; a JSON file supplied through
/// --config fills it first, explicit flags override field by field.
struct AnalysisConfig {
  int n = 0;
  int m = 0;
  int r = 0;            // pair target (with s)
  int s = 0;
  int next_n = 0;       // next-N target
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.05;
  int grid_size = 256;
  std::uint64_t seed = 1;
  std::vector<double> thetas{0.5, 1.0, 2.0};
  int trials = 10000;
  int inner_draws = 1000;
  std::string data_path;
  std::string out_path;   // prefix: <out>.json, <out>.csv, <out>.svg
  std::string svg_path;
  std::vector<std::string> at_points;  // density: "y1,y2" tokens

  bool has_pair() const { return r > 0 || s > 0; }
  bool has_next() const { return next_n > 0; }
};

/// Loads config fields from a JSON file; unknown keys are rejected.
void load_config_file(AnalysisConfig& cfg, const std::string& path);

}  // namespace censpred::cli

#endif  // CENSPRED_TOOLS_CONFIG_HPP

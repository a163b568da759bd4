#include "config.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace censpred::cli {

void load_config_file(AnalysisConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config file not readable: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file is not valid JSON: " +
                                std::string(e.what()));
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "n")
      cfg.n = value.get<int>();
    else if (key == "m")
      cfg.m = value.get<int>();
    else if (key == "r")
      cfg.r = value.get<int>();
    else if (key == "s")
      cfg.s = value.get<int>();
    else if (key == "next")
      cfg.next_n = value.get<int>();
    else if (key == "alpha")
      cfg.alpha = value.get<double>();
    else if (key == "beta")
      cfg.beta = value.get<double>();
    else if (key == "lambda")
      cfg.lambda = value.get<double>();
    else if (key == "grid")
      cfg.grid_size = value.get<int>();
    else if (key == "seed")
      cfg.seed = value.get<std::uint64_t>();
    else if (key == "thetas")
      cfg.thetas = value.get<std::vector<double>>();
    else if (key == "trials")
      cfg.trials = value.get<int>();
    else if (key == "inner")
      cfg.inner_draws = value.get<int>();
    else if (key == "data")
      cfg.data_path = value.get<std::string>();
    else if (key == "out")
      cfg.out_path = value.get<std::string>();
    else if (key == "svg")
      cfg.svg_path = value.get<std::string>();
    else if (key == "at")
      cfg.at_points = value.get<std::vector<std::string>>();
    else
      throw std::invalid_argument("config file: unknown key '" + key + "'");
  }
}

}  // namespace censpred::cli

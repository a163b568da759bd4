#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "censpred/regions.hpp"
#include "censpred/verify.hpp"
#include "ingest.hpp"
#include "svg.hpp"

namespace censpred::cli {

namespace {

using nlohmann::json;

std::string f4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string ffull(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_model(const AnalysisConfig& cfg) {
  if (cfg.n < 2 || cfg.m < 1 || cfg.m >= cfg.n)
    throw std::invalid_argument("need 1 <= m < n (flags --m, --n)");
  if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0))
    throw std::invalid_argument("--lambda must be in (0,1)");
  if (cfg.alpha < 0.0 || cfg.beta < 0.0)
    throw std::invalid_argument("--alpha and --beta must be >= 0");
}

PredictionTarget require_target(const AnalysisConfig& cfg) {
  if (cfg.has_pair() && cfg.has_next())
    throw std::invalid_argument("give either --r/--s or --next, not both");
  if (cfg.has_pair()) {
    PairTarget t{cfg.r, cfg.s};
    validate_target(cfg.n, cfg.m, t);
    return t;
  }
  if (cfg.has_next()) {
    NextNTarget t{cfg.next_n};
    validate_target(cfg.n, cfg.m, t);
    return t;
  }
  throw std::invalid_argument("no prediction target: give --r/--s or --next");
}

IngestResult load_sample(const AnalysisConfig& cfg) {
  if (cfg.data_path.empty())
    throw std::invalid_argument("this command needs --data <file>");
  return ingest(cfg.data_path, cfg.n, cfg.m);
}

json params_json(const AnalysisConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["lambda"] = cfg.lambda;
  j["seed"] = cfg.seed;
  if (cfg.has_pair()) {
    j["r"] = cfg.r;
    j["s"] = cfg.s;
  }
  if (cfg.has_next()) j["next"] = cfg.next_n;
  return j;
}

}  // namespace

CommandResult run_hpd(const AnalysisConfig& cfg) {
  require_model(cfg);
  if (!cfg.has_next())
    throw std::invalid_argument("hpd predicts the next-N spacings: give --next");
  const IngestResult data = load_sample(cfg);
  const GammaPrior prior{cfg.alpha, cfg.beta};
  const double x = sufficient_statistic(data.sample);
  const HalfSpaceRegion region =
      hpd_region(prior, x, cfg.n, cfg.m, cfg.next_n, cfg.lambda);

  std::vector<double> norm_coeff(region.coefficients);
  for (double& c : norm_coeff) c /= region.scale;
  const double c0 = region.bound / region.scale;

  CommandResult out;
  std::ostringstream table;
  if (!data.notice.empty()) table << "note: " << data.notice << "\n";
  table << "sufficient statistic x = " << f4(x) << "\n";
  table << "HPD region (credibility " << f4(1.0 - cfg.lambda) << "): ";
  for (std::size_t i = 0; i < norm_coeff.size(); ++i)
    table << (i ? " + " : "") << f4(norm_coeff[i]) << " z" << (i + 1);
  table << " <= " << f4(c0) << "\n";
  if (cfg.next_n != 2)
    table << "note: SVG rendering is 2D-only; JSON output carries the region\n";
  out.table = table.str();

  json j;
  j["command"] = "hpd";
  j["params"] = params_json(cfg);
  j["sufficient_statistic"] = x;
  j["region"] = json::parse(to_json(region));
  j["normalized"] = {{"coefficients", norm_coeff}, {"bound", c0}};
  out.json = j.dump(2) + "\n";

  if (cfg.next_n == 2) out.svg = svg_half_space(region);
  return out;
}

CommandResult run_region2d(const AnalysisConfig& cfg) {
  require_model(cfg);
  if (!cfg.has_pair())
    throw std::invalid_argument("region2d needs a pair target: --r and --s");
  PairTarget target{cfg.r, cfg.s};
  validate_target(cfg.n, cfg.m, target);
  const IngestResult data = load_sample(cfg);
  const GammaPrior prior{cfg.alpha, cfg.beta};
  const double x = sufficient_statistic(data.sample);

  const BandRegion band = build_band_region(prior, x, cfg.n, cfg.m, cfg.r,
                                            cfg.s, cfg.lambda, cfg.grid_size);
  const BandRegion band_os = to_order_statistics(band, data.sample);

  const SignedParetoMixture mix =
      predictive_pair(prior, x, cfg.n, cfg.m, cfg.r, cfg.s);
  std::vector<double> mean_curve(band.grid.size());
  std::vector<double> mean_curve_os(band.grid.size());
  for (std::size_t k = 0; k < band.grid.size(); ++k) {
    mean_curve[k] = conditional_mean_y2(mix, band.grid[k]);
    mean_curve_os[k] = band_os.grid[k] + mean_curve[k];
  }

  CommandResult out;
  std::ostringstream table;
  if (!data.notice.empty()) table << "note: " << data.notice << "\n";
  table << "sufficient statistic x = " << f4(x) << "\n";
  table << "step-1 interval A = [" << f4(band.a.lo) << ", " << f4(band.a.hi)
        << "]  (credibility " << f4(std::sqrt(1.0 - cfg.lambda)) << ")\n";
  const double mid = 0.5 * (band.a.lo + band.a.hi);
  const Interval bmid = band.slice_at(mid);
  table << "slice at A midpoint: B(" << f4(mid) << ") = [" << f4(bmid.lo)
        << ", " << f4(bmid.hi) << "]\n";
  table << "region table (" << band.grid.size() << " slices):\n";
  table << "  y1      b_lo      b_hi      E[Y2|y1]\n";
  const std::size_t step = std::max<std::size_t>(1, band.grid.size() / 16);
  for (std::size_t k = 0; k < band.grid.size();
       k = (k + step < band.grid.size() || k == band.grid.size() - 1)
               ? k + step
               : band.grid.size() - 1) {
    table << "  " << f4(band.grid[k]) << "  " << f4(band.slices[k].lo) << "  "
          << f4(band.slices[k].hi) << "  " << f4(mean_curve[k]) << "\n";
    if (k == band.grid.size() - 1) break;
  }
  table << "order-statistic frame: A + x_{m:n} = [" << f4(band_os.a.lo)
        << ", " << f4(band_os.a.hi) << "]  (x_{m:n} = "
        << f4(data.sample.values.back()) << ")\n";
  out.table = table.str();

  json j;
  j["command"] = "region2d";
  j["params"] = params_json(cfg);
  j["sufficient_statistic"] = x;
  j["spacings"] = json::parse(to_json(band));
  j["order_statistics"] = json::parse(to_json(band_os));
  json means = json::array();
  for (std::size_t k = 0; k < band.grid.size(); ++k)
    means.push_back({{"y1", band.grid[k]}, {"mean", mean_curve[k]}});
  j["conditional_mean"] = means;
  out.json = j.dump(2) + "\n";

  out.svg = svg_band(band, mean_curve, "y1", "y2");
  out.svg_secondary =
      svg_band(band_os, mean_curve_os, "x_r", "x_s");
  return out;
}

CommandResult run_coverage(const AnalysisConfig& cfg) {
  require_model(cfg);
  const PredictionTarget target = require_target(cfg);
  if (cfg.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (cfg.thetas.empty()) throw std::invalid_argument("empty theta grid");
  const GammaPrior prior{cfg.alpha, cfg.beta};
  const CoverageReport report =
      coverage_simulation(cfg.n, cfg.m, target, prior, cfg.lambda, cfg.thetas,
                          cfg.trials, cfg.seed, cfg.grid_size);

  CommandResult out;
  std::ostringstream table;
  table << "coverage simulation: trials = " << cfg.trials << ", target = "
        << f4(report.target) << "\n";
  table << "  theta    coverage  stderr";
  if (!report.coverage_refined.empty()) table << "    grid x2";
  table << "\n";
  for (std::size_t i = 0; i < report.thetas.size(); ++i) {
    table << "  " << f4(report.thetas[i]) << "   " << f4(report.coverage[i])
          << "    " << f4(report.stderrs[i]);
    if (!report.coverage_refined.empty())
      table << "    " << f4(report.coverage_refined[i]);
    table << "\n";
  }
  out.table = table.str();

  json j;
  j["command"] = "coverage";
  j["params"] = params_json(cfg);
  j["params"]["trials"] = cfg.trials;
  j["params"]["grid"] = cfg.grid_size;
  j["params"]["thetas"] = cfg.thetas;
  j["report"] = json::parse(to_json(report));
  out.json = j.dump(2) + "\n";
  out.csv = to_csv(report);
  return out;
}

CommandResult run_klrisk(const AnalysisConfig& cfg) {
  require_model(cfg);
  if (!cfg.has_next())
    throw std::invalid_argument(
        "klrisk is defined for the next-N target: give --next");
  NextNTarget target{cfg.next_n};
  validate_target(cfg.n, cfg.m, target);
  if (cfg.trials < 2) throw std::invalid_argument("--trials must be >= 2");

  const RiskReport pi0 = kl_risk_scan(
      cfg.n, cfg.m, cfg.next_n, cfg.thetas,
      pi0_spacing_predictive(cfg.n, cfg.m, cfg.next_n), cfg.trials,
      cfg.inner_draws, cfg.seed);
  const RiskReport plugin = kl_risk_scan(
      cfg.n, cfg.m, cfg.next_n, cfg.thetas,
      plugin_spacing_predictive(cfg.n, cfg.m, cfg.next_n), cfg.trials,
      cfg.inner_draws, cfg.seed + 1);

  CommandResult out;
  std::ostringstream table;
  table << "KL risk (outer " << cfg.trials << ", inner " << cfg.inner_draws
        << " draws)\n";
  table << "  theta    pi0 risk   stderr     plug-in    stderr\n";
  for (std::size_t i = 0; i < cfg.thetas.size(); ++i)
    table << "  " << f4(cfg.thetas[i]) << "   " << f4(pi0.risk[i]) << "   "
          << f4(pi0.stderrs[i]) << "   " << f4(plugin.risk[i]) << "   "
          << f4(plugin.stderrs[i]) << "\n";
  out.table = table.str();

  json j;
  j["command"] = "klrisk";
  j["params"] = params_json(cfg);
  j["params"]["trials"] = cfg.trials;
  j["params"]["inner"] = cfg.inner_draws;
  j["params"]["thetas"] = cfg.thetas;
  j["pi0"] = json::parse(to_json(pi0));
  j["plugin"] = json::parse(to_json(plugin));
  out.json = j.dump(2) + "\n";

  std::ostringstream csv;
  csv << "theta,density,risk,stderr\n";
  for (std::size_t i = 0; i < cfg.thetas.size(); ++i)
    csv << ffull(cfg.thetas[i]) << ",pi0," << ffull(pi0.risk[i]) << ','
        << ffull(pi0.stderrs[i]) << "\n";
  for (std::size_t i = 0; i < cfg.thetas.size(); ++i)
    csv << ffull(cfg.thetas[i]) << ",plugin," << ffull(plugin.risk[i]) << ','
        << ffull(plugin.stderrs[i]) << "\n";
  out.csv = csv.str();
  return out;
}

CommandResult run_density(const AnalysisConfig& cfg) {
  require_model(cfg);
  const PredictionTarget target = require_target(cfg);
  const IngestResult data = load_sample(cfg);
  if (cfg.at_points.empty())
    throw std::invalid_argument("density needs at least one --at y1,y2,...");
  const GammaPrior prior{cfg.alpha, cfg.beta};
  const double x = sufficient_statistic(data.sample);

  const int dim = cfg.has_pair() ? 2 : cfg.next_n;
  std::vector<std::vector<double>> points;
  for (const std::string& token : cfg.at_points) {
    std::vector<double> p;
    std::istringstream fields(token);
    std::string piece;
    while (std::getline(fields, piece, ',')) {
      try {
        p.push_back(std::stod(piece));
      } catch (const std::exception&) {
        throw std::invalid_argument("--at: non-numeric component '" + piece +
                                    "'");
      }
    }
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("--at needs " + std::to_string(dim) +
                                  " comma-separated components");
    points.push_back(std::move(p));
  }

  std::vector<double> values;
  if (cfg.has_pair()) {
    const SignedParetoMixture mix =
        predictive_pair(prior, x, cfg.n, cfg.m, cfg.r, cfg.s);
    for (const auto& p : points) values.push_back(mix.pdf(p[0], p[1]));
  } else {
    const MultiParetoII pred =
        predictive_next_n(prior, x, cfg.n, cfg.m, cfg.next_n);
    for (const auto& p : points) values.push_back(pred.pdf(p));
  }

  CommandResult out;
  std::ostringstream table;
  if (!data.notice.empty()) table << "note: " << data.notice << "\n";
  table << "sufficient statistic x = " << f4(x) << "\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    table << "q(";
    for (std::size_t c = 0; c < points[i].size(); ++c)
      table << (c ? ", " : "") << f4(points[i][c]);
    table << ") = " << ffull(values[i]) << "\n";
  }
  out.table = table.str();

  json j;
  j["command"] = "density";
  j["params"] = params_json(cfg);
  j["sufficient_statistic"] = x;
  json rows = json::array();
  for (std::size_t i = 0; i < points.size(); ++i)
    rows.push_back({{"point", points[i]}, {"density", values[i]}});
  j["points"] = rows;
  out.json = j.dump(2) + "\n";
  return out;
}

}  // namespace censpred::cli

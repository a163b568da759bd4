#ifndef CENSPRED_VERIFY_HPP
#define CENSPRED_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "censpred/model.hpp"
#include "censpred/predictive.hpp"

namespace censpred {

/// Empirical frequentist coverage of the prediction regions over a grid of
/// rate values. For band targets the membership test uses the same grid
/// interpolation as BandRegion::contains, and `coverage_refined` reruns the
/// membership at doubled grid size to expose the discretization bias.
struct CoverageReport {
  double target = 0.0;  // 1 - lambda
  int trials = 0;
  int grid_size = 0;  // band targets only, 0 otherwise
  std::vector<double> thetas;
  std::vector<double> coverage;
  std::vector<double> stderrs;            // sqrt(p(1-p)/trials)
  std::vector<double> coverage_refined;   // empty for half-space targets
};

/// Per trial: simulate a censored experiment, build the region from the
/// realized sufficient statistic, and test whether the realized future
/// spacings fall inside. Trials use deterministically derived substreams of
/// the master seed and are reduced in trial order, so reports are
/// bit-reproducible (and safely parallelizable).
CoverageReport coverage_simulation(int n, int m, const PredictionTarget& target,
                                   const GammaPrior& prior, double lambda,
                                   const std::vector<double>& thetas,
                                   int trials, std::uint64_t seed,
                                   int grid_size = 256);

/// Goodness-of-fit of the empirical law of Y'/X (simulated at each theta)
/// against the non-informative predictive law of Y'/x at x = 1, which the
/// pivotal identity says must coincide for every theta. Reports one-sample
/// KS statistics per coordinate and two-sample KS statistics between the
/// first two theta runs.
struct RatioFitReport {
  int trials = 0;
  std::vector<double> thetas;
  std::vector<std::vector<double>> ks;  // [theta][coordinate]
  std::vector<double> ks_between;       // per coordinate
  double critical_one_sample = 0.0;     // 1% level
  double critical_two_sample = 0.0;
};

RatioFitReport ratio_density_check(int n, int m, const PredictionTarget& target,
                                   const std::vector<double>& thetas,
                                   int trials, std::uint64_t seed);

/// Density of the pivotal ratio R = Y'/X for the next-N target, by direct
/// quadrature of u^N q1(r u) p(u) du; used to validate the closed form.
double ratio_density_next_n(int n, int m, int N, std::span<const double> r);

/// Predictive-density handle q(z; x) for the next-N spacings.
using SpacingDensity =
    std::function<double(double x, std::span<const double> z)>;

/// The non-informative Bayes predictive (multivariate Pareto in z/x).
SpacingDensity pi0_spacing_predictive(int n, int m, int N);
/// Plug-in density with the scale-invariant estimate theta-hat = m/x.
SpacingDensity plugin_spacing_predictive(int n, int m, int N);
/// The true model density at a fixed theta (ignores x).
SpacingDensity model_spacing_density(int n, int m, int N, double theta);

struct RiskEstimate {
  double risk = 0.0;
  double stderr_ = 0.0;
};

/// Kullback-Leibler risk of a predictive density for the next-N spacings at
/// a fixed theta: outer Monte Carlo over X ~ Gamma(m, theta), inner Monte
/// Carlo over the model spacings for the divergence integral. The reported
/// standard error comes from the outer loop only.
RiskEstimate kl_risk_estimate(int n, int m, int N, double theta,
                              const SpacingDensity& density, int outer_trials,
                              int inner_draws, std::uint64_t seed);

struct RiskReport {
  int outer_trials = 0;
  int inner_draws = 0;
  std::vector<double> thetas;
  std::vector<double> risk;
  std::vector<double> stderrs;
};

RiskReport kl_risk_scan(int n, int m, int N,
                        const std::vector<double>& thetas,
                        const SpacingDensity& density, int outer_trials,
                        int inner_draws, std::uint64_t seed);

// Serialization: JSON, and CSV with one row per theta.
std::string to_json(const CoverageReport& report);
std::string to_csv(const CoverageReport& report);
CoverageReport coverage_report_from_json(const std::string& text);
std::string to_json(const RiskReport& report);
std::string to_csv(const RiskReport& report);
RiskReport risk_report_from_json(const std::string& text);

}  // namespace censpred

#endif  // CENSPRED_VERIFY_HPP

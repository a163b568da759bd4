#include "censpred/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "censpred/numerics.hpp"
#include "censpred/quadrature.hpp"
#include "censpred/regions.hpp"

namespace censpred {

namespace {

using nlohmann::json;

// realized spacings of the target from a simulated experiment
void target_spacings(const Experiment& exp, const NextNTarget& t,
                     std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(t.count));
  double prev = exp.sample.values.back();
  for (int i = 0; i < t.count; ++i) {
    out[static_cast<std::size_t>(i)] =
        exp.future[static_cast<std::size_t>(i)] - prev;
    prev = exp.future[static_cast<std::size_t>(i)];
  }
}

void target_spacings(const Experiment& exp, const PairTarget& t,
                     std::vector<double>& out) {
  const int m = exp.sample.m;
  out.resize(2);
  out[0] = exp.future[static_cast<std::size_t>(t.r - m - 1)] -
           exp.sample.values.back();
  out[1] = exp.future[static_cast<std::size_t>(t.s - m - 1)] -
           exp.future[static_cast<std::size_t>(t.r - m - 1)];
}

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// coverage

CoverageReport coverage_simulation(int n, int m, const PredictionTarget& target,
                                   const GammaPrior& prior, double lambda,
                                   const std::vector<double>& thetas,
                                   int trials, std::uint64_t seed,
                                   int grid_size) {
  if (trials < 1)
    throw std::invalid_argument("coverage_simulation: trials must be >= 1");
  if (thetas.empty())
    throw std::invalid_argument("coverage_simulation: empty theta grid");
  std::visit([&](const auto& t) { validate_target(n, m, t); }, target);

  CoverageReport report;
  report.target = 1.0 - lambda;
  report.trials = trials;
  report.thetas = thetas;

  const bool is_band = std::holds_alternative<PairTarget>(target);
  const bool pi0 = prior.noninformative();

  // For the non-informative prior the whole band construction is scale
  // equivariant in x (grid placement included), so the unit band at x = 1
  // serves every trial: (y1, y2) lies in the band at x iff (y1/x, y2/x)
  // lies in the unit band.
  BandRegion unit_band, unit_band_refined;
  double c0 = 0.0;
  if (is_band) {
    report.grid_size = grid_size;
    const auto& pt = std::get<PairTarget>(target);
    if (pi0) {
      unit_band = build_band_region(prior, 1.0, n, m, pt.r, pt.s, lambda,
                                    grid_size);
      unit_band_refined = build_band_region(prior, 1.0, n, m, pt.r, pt.s,
                                            lambda, 2 * grid_size);
    }
  } else {
    const auto& nt = std::get<NextNTarget>(target);
    const BetaTypeII w(static_cast<double>(nt.count),
                       prior.alpha + static_cast<double>(m));
    c0 = w.quantile(1.0 - lambda);
  }

  std::vector<double> spacings;
  for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
    const double theta = thetas[ti];
    long hits = 0, hits_refined = 0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::substream(
          seed, ti * static_cast<std::uint64_t>(trials) +
                    static_cast<std::uint64_t>(trial));
      const Experiment exp = simulate_experiment(n, m, theta, rng);
      const double x = sufficient_statistic(exp.sample);
      std::visit([&](const auto& t) { target_spacings(exp, t, spacings); },
                 target);
      if (is_band) {
        const auto& pt = std::get<PairTarget>(target);
        if (pi0) {
          hits += unit_band.contains(spacings[0] / x, spacings[1] / x);
          hits_refined +=
              unit_band_refined.contains(spacings[0] / x, spacings[1] / x);
        } else {
          hits += band_contains_pointwise(prior, x, n, m, pt.r, pt.s, lambda,
                                          grid_size, spacings[0], spacings[1]);
          hits_refined += band_contains_pointwise(prior, x, n, m, pt.r, pt.s,
                                                  lambda, 2 * grid_size,
                                                  spacings[0], spacings[1]);
        }
      } else {
        double w = 0.0;
        for (std::size_t i = 0; i < spacings.size(); ++i)
          w += static_cast<double>(n - m - static_cast<int>(i)) * spacings[i];
        hits += w <= c0 * (x + prior.beta);
      }
    }
    const double p = static_cast<double>(hits) / trials;
    report.coverage.push_back(p);
    report.stderrs.push_back(std::sqrt(p * (1.0 - p) / trials));
    if (is_band)
      report.coverage_refined.push_back(static_cast<double>(hits_refined) /
                                        trials);
  }
  return report;
}

// ---------------------------------------------------------------------------
// pivotal ratio check

RatioFitReport ratio_density_check(int n, int m, const PredictionTarget& target,
                                   const std::vector<double>& thetas,
                                   int trials, std::uint64_t seed) {
  if (trials < 1)
    throw std::invalid_argument("ratio_density_check: trials must be >= 1");
  std::visit([&](const auto& t) { validate_target(n, m, t); }, target);

  // reference CDFs: pi0 predictive marginals of the ratio at x = 1
  const GammaPrior pi0;
  std::vector<std::function<double(double)>> ref_cdf;
  int dim = 0;
  if (std::holds_alternative<NextNTarget>(target)) {
    const auto& nt = std::get<NextNTarget>(target);
    dim = nt.count;
    const MultiParetoII pred = predictive_next_n(pi0, 1.0, n, m, nt.count);
    for (int i = 0; i < dim; ++i) {
      const ParetoII marg = pred.marginal(i);
      ref_cdf.emplace_back([marg](double t) { return marg.cdf(t); });
    }
  } else {
    const auto& pt = std::get<PairTarget>(target);
    dim = 2;
    const SignedParetoMixture pred =
        predictive_pair(pi0, 1.0, n, m, pt.r, pt.s);
    const ParetoMixture1D m1 = marginal_y1(pred);
    const ParetoMixture1D m2 = marginal_y2(pred);
    ref_cdf.emplace_back([m1](double t) { return m1.cdf(t); });
    ref_cdf.emplace_back([m2](double t) { return m2.cdf(t); });
  }

  RatioFitReport report;
  report.trials = trials;
  report.thetas = thetas;
  report.critical_one_sample =
      kolmogorov_critical(0.01) / std::sqrt(static_cast<double>(trials));
  report.critical_two_sample =
      kolmogorov_critical(0.01) * std::sqrt(2.0 / trials);

  std::vector<std::vector<std::vector<double>>> ratios;  // [theta][coord][trial]
  std::vector<double> spacings;
  for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
    std::vector<std::vector<double>> coords(
        static_cast<std::size_t>(dim),
        std::vector<double>(static_cast<std::size_t>(trials)));
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::substream(
          seed, (1000 + ti) * static_cast<std::uint64_t>(trials) +
                    static_cast<std::uint64_t>(trial));
      const Experiment exp = simulate_experiment(n, m, thetas[ti], rng);
      const double x = sufficient_statistic(exp.sample);
      std::visit([&](const auto& t) { target_spacings(exp, t, spacings); },
                 target);
      for (int c = 0; c < dim; ++c)
        coords[static_cast<std::size_t>(c)][static_cast<std::size_t>(trial)] =
            spacings[static_cast<std::size_t>(c)] / x;
    }
    std::vector<double> ks_row;
    for (int c = 0; c < dim; ++c) {
      auto& col = coords[static_cast<std::size_t>(c)];
      std::sort(col.begin(), col.end());
      ks_row.push_back(ks_statistic(col, ref_cdf[static_cast<std::size_t>(c)]));
    }
    report.ks.push_back(std::move(ks_row));
    ratios.push_back(std::move(coords));
  }
  if (ratios.size() >= 2) {
    for (int c = 0; c < dim; ++c)
      report.ks_between.push_back(
          ks_two_sample(ratios[0][static_cast<std::size_t>(c)],
                        ratios[1][static_cast<std::size_t>(c)]));
  }
  return report;
}

double ratio_density_next_n(int n, int m, int N, std::span<const double> r) {
  validate_target(n, m, NextNTarget{N});
  if (static_cast<int>(r.size()) != N)
    throw std::invalid_argument("ratio_density_next_n: dimension mismatch");
  double lin = 0.0, log_rates = 0.0;
  for (int i = 0; i < N; ++i) {
    if (r[static_cast<std::size_t>(i)] < 0.0)
      throw std::domain_error("ratio_density_next_n: r must be >= 0");
    const double rate = static_cast<double>(n - m - i);
    log_rates += std::log(rate + 0.0);
  }
  for (int i = 0; i < N; ++i)
    lin += static_cast<double>(n - m - i) * r[static_cast<std::size_t>(i)];
  // integral of u^N q1(r u) p(u) du with p the unit-scale Gamma(m) density;
  // the exponent is the target dimension, not half of it
  const double log_c = log_rates - std::lgamma(static_cast<double>(m));
  const auto f = [&](double u) {
    if (u <= 0.0) return 0.0;
    const double lg = log_c + (N + m - 1.0) * std::log(u) - u * (1.0 + lin);
    return std::exp(lg);
  };
  return integrate_semi_infinite(f, (N + m) / (1.0 + lin), 1e-10);
}

// ---------------------------------------------------------------------------
// KL risk

SpacingDensity pi0_spacing_predictive(int n, int m, int N) {
  validate_target(n, m, NextNTarget{N});
  // Theorem-1 closed form with alpha = beta = 0, evaluated directly
  const std::vector<double> rates = model_spacing_rates(n, m, N);
  double log_norm = std::lgamma(m + N + 0.0) - std::lgamma(m + 0.0);
  for (double rate : rates) log_norm += std::log(rate);
  return [rates, log_norm, m, N](double x, std::span<const double> z) {
    double s = 0.0;
    for (std::size_t i = 0; i < rates.size(); ++i) s += rates[i] * z[i];
    return std::exp(log_norm - N * std::log(x) -
                    (m + N) * std::log1p(s / x));
  };
}

SpacingDensity plugin_spacing_predictive(int n, int m, int N) {
  validate_target(n, m, NextNTarget{N});
  const std::vector<double> rates = model_spacing_rates(n, m, N);
  return [rates, m](double x, std::span<const double> z) {
    const double theta_hat = static_cast<double>(m) / x;
    double lg = 0.0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const double rate = rates[i] * theta_hat;
      lg += std::log(rate) - rate * z[i];
    }
    return std::exp(lg);
  };
}

SpacingDensity model_spacing_density(int n, int m, int N, double theta) {
  validate_target(n, m, NextNTarget{N});
  if (!(theta > 0.0))
    throw std::domain_error("model_spacing_density: theta must be > 0");
  const std::vector<double> rates = model_spacing_rates(n, m, N);
  return [rates, theta](double, std::span<const double> z) {
    double lg = 0.0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const double rate = rates[i] * theta;
      lg += std::log(rate) - rate * z[i];
    }
    return std::exp(lg);
  };
}

RiskEstimate kl_risk_estimate(int n, int m, int N, double theta,
                              const SpacingDensity& density, int outer_trials,
                              int inner_draws, std::uint64_t seed) {
  validate_target(n, m, NextNTarget{N});
  if (!(theta > 0.0))
    throw std::domain_error("kl_risk_estimate: theta must be > 0");
  if (outer_trials < 2 || inner_draws < 1)
    throw std::invalid_argument("kl_risk_estimate: need outer >= 2, inner >= 1");
  const std::vector<double> rates = model_spacing_rates(n, m, N);

  double sum = 0.0, sum_sq = 0.0;
  std::vector<double> z(static_cast<std::size_t>(N));
  for (int t = 0; t < outer_trials; ++t) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
    const double x = rng.gamma(static_cast<double>(m)) / theta;
    double loss = 0.0;
    for (int k = 0; k < inner_draws; ++k) {
      double log_q_theta = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        const double rate = rates[i] * theta;
        z[i] = rng.exponential(rate);
        log_q_theta += std::log(rate) - rate * z[i];
      }
      const double q_hat = density(x, z);
      if (!(q_hat > 0.0))
        throw NumericalError(
            "kl_risk_estimate: nonpositive predictive density value");
      loss += log_q_theta - std::log(q_hat);
    }
    loss /= inner_draws;
    sum += loss;
    sum_sq += loss * loss;
  }
  const double mean = sum / outer_trials;
  const double var =
      std::max(0.0, (sum_sq / outer_trials - mean * mean)) /
      (outer_trials - 1.0);
  return RiskEstimate{mean, std::sqrt(var)};
}

RiskReport kl_risk_scan(int n, int m, int N,
                        const std::vector<double>& thetas,
                        const SpacingDensity& density, int outer_trials,
                        int inner_draws, std::uint64_t seed) {
  RiskReport report;
  report.outer_trials = outer_trials;
  report.inner_draws = inner_draws;
  report.thetas = thetas;
  for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
    const RiskEstimate est = kl_risk_estimate(
        n, m, N, thetas[ti], density, outer_trials, inner_draws,
        seed + 7919 * (ti + 1));
    report.risk.push_back(est.risk);
    report.stderrs.push_back(est.stderr_);
  }
  return report;
}

// ---------------------------------------------------------------------------
// serialization

std::string to_json(const CoverageReport& report) {
  json j;
  j["target"] = report.target;
  j["trials"] = report.trials;
  j["grid_size"] = report.grid_size;
  j["thetas"] = report.thetas;
  j["coverage"] = report.coverage;
  j["stderr"] = report.stderrs;
  j["coverage_refined"] = report.coverage_refined;
  return j.dump(2);
}

CoverageReport coverage_report_from_json(const std::string& text) {
  const json j = json::parse(text);
  CoverageReport report;
  report.target = j.at("target").get<double>();
  report.trials = j.at("trials").get<int>();
  report.grid_size = j.at("grid_size").get<int>();
  report.thetas = j.at("thetas").get<std::vector<double>>();
  report.coverage = j.at("coverage").get<std::vector<double>>();
  report.stderrs = j.at("stderr").get<std::vector<double>>();
  report.coverage_refined =
      j.at("coverage_refined").get<std::vector<double>>();
  return report;
}

std::string to_csv(const CoverageReport& report) {
  std::ostringstream out;
  const bool refined = !report.coverage_refined.empty();
  out << "theta,trials,target,coverage,stderr";
  if (refined) out << ",coverage_refined";
  out << "\n";
  for (std::size_t i = 0; i < report.thetas.size(); ++i) {
    out << format_full(report.thetas[i]) << ',' << report.trials << ','
        << format_full(report.target) << ','
        << format_full(report.coverage[i]) << ','
        << format_full(report.stderrs[i]);
    if (refined) out << ',' << format_full(report.coverage_refined[i]);
    out << "\n";
  }
  return out.str();
}

std::string to_json(const RiskReport& report) {
  json j;
  j["outer_trials"] = report.outer_trials;
  j["inner_draws"] = report.inner_draws;
  j["thetas"] = report.thetas;
  j["risk"] = report.risk;
  j["stderr"] = report.stderrs;
  return j.dump(2);
}

RiskReport risk_report_from_json(const std::string& text) {
  const json j = json::parse(text);
  RiskReport report;
  report.outer_trials = j.at("outer_trials").get<int>();
  report.inner_draws = j.at("inner_draws").get<int>();
  report.thetas = j.at("thetas").get<std::vector<double>>();
  report.risk = j.at("risk").get<std::vector<double>>();
  report.stderrs = j.at("stderr").get<std::vector<double>>();
  return report;
}

std::string to_csv(const RiskReport& report) {
  std::ostringstream out;
  out << "theta,outer_trials,inner_draws,risk,stderr\n";
  for (std::size_t i = 0; i < report.thetas.size(); ++i)
    out << format_full(report.thetas[i]) << ',' << report.outer_trials << ','
        << report.inner_draws << ',' << format_full(report.risk[i]) << ','
        << format_full(report.stderrs[i]) << "\n";
  return out.str();
}

}  // namespace censpred

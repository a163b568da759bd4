// Acceptance suite: runs every agreed criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "censpred/numerics.hpp"
#include "censpred/regions.hpp"
#include "censpred/verify.hpp"
#include "commands.hpp"
#include "ingest.hpp"
#include "support/oracle.hpp"

using namespace censpred;

namespace {

int failures = 0;

void check(const std::string& name, bool pass, const std::string& detail) {
  std::printf("%-4s criterion %s  %s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

const GammaPrior pi0{};

// --------------------------------------------------------------------------

void criterion1_worked_example() {
  const auto t0 = std::chrono::steady_clock::now();
  const cli::IngestResult data = cli::ingest(CENSPRED_MURTHY_CSV, 30, 20);
  const double x = sufficient_statistic(data.sample);
  check("1a", std::abs(x - 35.79) <= 1e-10,
        fmt("sufficient statistic = %.12f", x));

  const HalfSpaceRegion hpd = hpd_region(pi0, x, 30, 20, 2, 0.05);
  const double c1 = hpd.coefficients[0] / hpd.scale;
  const double c2 = hpd.coefficients[1] / hpd.scale;
  const double c0 = hpd.bound / hpd.scale;
  check("1b",
        std::abs(c1 - 0.2794) <= 5e-4 && std::abs(c2 - 0.2515) <= 5e-4 &&
            std::abs(c0 - 0.2606) <= 5e-4,
        fmt("HPD: %.4f z1 + %.4f z2 <= %.4f", c1, c2, c0));

  const BandRegion band95 = build_band_region(pi0, x, 30, 20, 21, 30, 0.05, 256);
  const Interval b_half = step2_interval(pi0, x, 30, 20, 21, 30, 0.05, 0.50);
  bool all_include_zero = true;
  for (const Interval& s : band95.slices)
    all_include_zero = all_include_zero && s.lo == 0.0;
  check("1c",
        std::abs(band95.a.hi - 0.722) <= 2e-3 && band95.a.lo == 0.0 &&
            b_half.lo == 0.0 && std::abs(b_half.hi - 13.059) <= 5e-3 &&
            all_include_zero,
        fmt("A = [0, %.4f], B(0.50) = [%.3f, %.4f], slices cover 0: %s",
            band95.a.hi, b_half.lo, b_half.hi,
            all_include_zero ? "yes" : "no"));

  const BandRegion band80 = build_band_region(pi0, x, 30, 20, 21, 30, 0.20, 256);
  double min_lo = 1e300;
  for (const Interval& s : band80.slices) min_lo = std::min(min_lo, s.lo);
  check("1d",
        std::abs(band80.a.hi - 0.4258) <= 5e-4 && min_lo > 0.0,
        fmt("A = [0, %.4f], min slice lower bound = %.4f", band80.a.hi,
            min_lo));

  const double elapsed = seconds_since(t0);
  check("1-runtime", elapsed < 5.0, fmt("%.2f s (< 5 s)", elapsed));
}

// --------------------------------------------------------------------------

double pair_quadrature_oracle(double x, int n, int m, int r, int s, double y1,
                              double y2) {
  const double shape = static_cast<double>(m), rate = x;
  const double log_post_c = shape * std::log(rate) - std::lgamma(shape);
  return oracle::integral_half_line(
      [&](double th) {
        if (th <= 0.0) return 0.0;
        const double lg =
            log_post_c + (shape - 1.0) * std::log(th) - th * rate;
        return model_density_pair(n, m, r, s, th, y1, y2) * std::exp(lg);
      },
      (shape + 2.0) / rate, 1e-11);
}

double next_quadrature_oracle(double x, int n, int m,
                              const std::vector<double>& z) {
  const int N = static_cast<int>(z.size());
  const std::vector<double> rates = model_spacing_rates(n, m, N);
  const double shape = static_cast<double>(m), rate = x;
  const double log_post_c = shape * std::log(rate) - std::lgamma(shape);
  return oracle::integral_half_line(
      [&](double th) {
        if (th <= 0.0) return 0.0;
        double lg = log_post_c + (shape - 1.0) * std::log(th) - th * rate;
        for (int i = 0; i < N; ++i)
          lg += std::log(rates[static_cast<std::size_t>(i)] * th) -
                rates[static_cast<std::size_t>(i)] * th *
                    z[static_cast<std::size_t>(i)];
        return std::exp(lg);
      },
      (shape + N) / rate, 1e-11);
}

void criterion2_oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const double x = 1.7;
  double worst = 0.0;
  Rng rng(20260810);

  struct PairCfg {
    int n, m, r, s;
  };
  for (const PairCfg& c :
       {PairCfg{5, 2, 3, 5}, PairCfg{6, 2, 4, 6}, PairCfg{6, 3, 4, 5}}) {
    const SignedParetoMixture mix = predictive_pair(pi0, x, c.n, c.m, c.r, c.s);
    for (int k = 0; k < 20; ++k) {
      const double y1 = 2.5 * rng.uniform(), y2 = 2.5 * rng.uniform();
      const double closed = mix.pdf(y1, y2);
      const double reference =
          pair_quadrature_oracle(x, c.n, c.m, c.r, c.s, y1, y2);
      worst = std::max(worst, std::abs(closed - reference) / reference);
    }
  }
  struct NextCfg {
    int n, m, N;
  };
  for (const NextCfg& c : {NextCfg{5, 2, 2}, NextCfg{6, 3, 3}}) {
    const MultiParetoII pred = predictive_next_n(pi0, x, c.n, c.m, c.N);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> z(static_cast<std::size_t>(c.N));
      for (double& v : z) v = 2.5 * rng.uniform();
      const double closed = pred.pdf(z);
      const double reference = next_quadrature_oracle(x, c.n, c.m, z);
      worst = std::max(worst, std::abs(closed - reference) / reference);
    }
  }
  const double elapsed = seconds_since(t0);
  check("2", worst < 1e-8,
        fmt("closed form vs quadrature, worst relative error %.3g", worst));
  check("2-runtime", elapsed < 30.0, fmt("%.2f s (< 30 s)", elapsed));
}

// --------------------------------------------------------------------------

void criterion3_normalization() {
  // exhaustive weight normalization over every configuration with n <= 40
  double worst_sum_dev = 0.0, worst_naive_dev = 0.0;
  long configs = 0;
  for (int n = 3; n <= 40; ++n)
    for (int m = 1; m <= n - 2; ++m)
      for (int r = m + 1; r <= n - 1; ++r)
        for (int s = r + 1; s <= n; ++s) {
          const SignedParetoMixture mix = predictive_pair(pi0, 1.0, n, m, r, s);
          worst_sum_dev =
              std::max(worst_sum_dev, std::abs(mix.weight_sum() - 1.0));
          // where the products are exactly representable, the plain
          // compensated sum of the stored weights must agree
          if (mix.condition() < 0x1p52) {
            std::vector<double> terms;
            terms.reserve(mix.a().size() * mix.b().size());
            for (std::size_t i = 0; i < mix.a().size(); ++i)
              for (std::size_t j = 0; j < mix.b().size(); ++j)
                terms.push_back(mix.weight(static_cast<int>(i),
                                           static_cast<int>(j)));
            worst_naive_dev = std::max(
                worst_naive_dev,
                std::abs(sum_descending_magnitude(std::move(terms)) - 1.0));
          }
          ++configs;
        }
  check("3-weights", worst_sum_dev < 1e-10 && worst_naive_dev < 1e-10,
        fmt("%ld configurations, worst |sum - 1| = %.3g (stored-double sum "
            "%.3g)",
            configs, worst_sum_dev, worst_naive_dev));

  // unit mass of the small-instance predictive densities
  double worst_mass = 0.0;
  struct PairCfg {
    int n, m, r, s;
  };
  for (const PairCfg& c :
       {PairCfg{5, 2, 3, 5}, PairCfg{6, 2, 4, 6}, PairCfg{6, 3, 4, 5}}) {
    const SignedParetoMixture mix = predictive_pair(pi0, 1.7, c.n, c.m, c.r, c.s);
    const double total = oracle::integral_quadrant(
        [&](double y1, double y2) { return mix.pdf(y1, y2); }, 1.0, 1.0, 1e-8);
    worst_mass = std::max(worst_mass, std::abs(total - 1.0));
  }
  {
    const MultiParetoII pred2 = predictive_next_n(pi0, 1.7, 5, 2, 2);
    const double total2 = oracle::integral_quadrant(
        [&](double z1, double z2) {
          const std::vector<double> z{z1, z2};
          return pred2.pdf(z);
        },
        1.0, 1.0, 1e-8);
    worst_mass = std::max(worst_mass, std::abs(total2 - 1.0));

    const MultiParetoII pred3 = predictive_next_n(pi0, 1.7, 6, 3, 3);
    const double total3 = oracle::integral_half_line(
        [&](double z1) {
          return oracle::integral_half_line(
              [&](double z2) {
                return oracle::integral_half_line(
                    [&](double z3) {
                      const std::vector<double> z{z1, z2, z3};
                      return pred3.pdf(z);
                    },
                    0.6, 2e-8);
              },
              0.6, 2e-8);
        },
        0.6, 2e-7);
    worst_mass = std::max(worst_mass, std::abs(total3 - 1.0));
  }
  check("3-mass", worst_mass < 1e-6,
        fmt("predictive densities integrate to 1, worst deviation %.3g",
            worst_mass));

  // shape1 = 2 closed form against the incomplete-beta path
  double worst_beta = 0.0;
  for (double b : {20.0, 21.0}) {
    const BetaTypeII d(2.0, b);
    for (int k = 1; k <= 100; ++k) {
      const double c = 0.005 * k * k;
      const double closed =
          1.0 - (1.0 + c * (b + 1.0)) * std::exp(-(b + 1.0) * std::log1p(c));
      worst_beta = std::max(worst_beta, std::abs(d.cdf(c) - closed));
    }
  }
  check("3-beta2", worst_beta < 1e-12,
        fmt("closed form vs incomplete beta, worst |diff| = %.3g",
            worst_beta));
}

// --------------------------------------------------------------------------

void criterion4_credibility() {
  double worst_hpd = 0.0;
  int tuples = 0;
  for (int N : {1, 2, 3, 5, 8})
    for (double alpha : {0.0, 2.5})
      for (double lambda : {0.05, 0.2}) {
        const GammaPrior prior{alpha, 0.0};
        const HalfSpaceRegion region =
            hpd_region(prior, 11.3, 40, 20, N, lambda);
        worst_hpd = std::max(
            worst_hpd, std::abs(hpd_credibility(region) - (1.0 - lambda)));
        ++tuples;
      }
  check("4-hpd", worst_hpd < 1e-8,
        fmt("%d tuples, worst |mass - (1-lambda)| = %.3g", tuples, worst_hpd));

  const BandRegion coarse =
      build_band_region(pi0, 35.79, 30, 20, 21, 30, 0.05, 256);
  const BandRegion fine =
      build_band_region(pi0, 35.79, 30, 20, 21, 30, 0.05, 512);
  const double mass_coarse =
      band_credibility(pi0, 35.79, 30, 20, 21, 30, coarse);
  const double mass_fine = band_credibility(pi0, 35.79, 30, 20, 21, 30, fine);
  check("4-band",
        std::abs(mass_coarse - 0.95) < 1e-3 &&
            std::abs(mass_fine - 0.95) < 2.5e-4,
        fmt("band mass: %.6f at grid 256, %.6f at grid 512", mass_coarse,
            mass_fine));
}

// --------------------------------------------------------------------------

void criterion5_coverage() {
  const auto t0 = std::chrono::steady_clock::now();
  const int trials = 100000;
  const std::vector<double> thetas{0.5, 1.0, 2.0};

  const auto within = [&](const CoverageReport& r) {
    double worst = 0.0;
    for (std::size_t i = 0; i < r.coverage.size(); ++i)
      worst = std::max(worst,
                       std::abs(r.coverage[i] - r.target) / r.stderrs[i]);
    return worst;
  };

  const CoverageReport hpd = coverage_simulation(
      30, 20, NextNTarget{2}, pi0, 0.05, thetas, trials, 501);
  const double w1 = within(hpd);
  check("5-hpd", w1 <= 3.0,
        fmt("HPD coverage %.4f/%.4f/%.4f, worst deviation %.2f sigma",
            hpd.coverage[0], hpd.coverage[1], hpd.coverage[2], w1));

  const CoverageReport band95 = coverage_simulation(
      30, 20, PairTarget{21, 30}, pi0, 0.05, thetas, trials, 502);
  const double w2 = within(band95);
  check("5-band95", w2 <= 3.0,
        fmt("band coverage %.4f/%.4f/%.4f, worst deviation %.2f sigma",
            band95.coverage[0], band95.coverage[1], band95.coverage[2], w2));

  const CoverageReport band80 = coverage_simulation(
      30, 20, PairTarget{21, 30}, pi0, 0.20, thetas, trials, 503);
  const double w3 = within(band80);
  check("5-band80", w3 <= 3.0,
        fmt("band coverage %.4f/%.4f/%.4f, worst deviation %.2f sigma",
            band80.coverage[0], band80.coverage[1], band80.coverage[2], w3));

  const GammaPrior informative{5.0, 0.1};
  const CoverageReport neg = coverage_simulation(
      30, 20, NextNTarget{2}, informative, 0.05, thetas, trials, 504);
  const double w4 = within(neg);
  check("5-negative-control", w4 > 4.0,
        fmt("informative-prior coverage %.4f/%.4f/%.4f, max deviation %.1f "
            "sigma",
            neg.coverage[0], neg.coverage[1], neg.coverage[2], w4));

  const double elapsed = seconds_since(t0);
  check("5-runtime", elapsed < 300.0, fmt("%.1f s (< 300 s)", elapsed));
}

// --------------------------------------------------------------------------

void criterion6_kl_risk() {
  const int outer = 20000, inner = 1000;
  const std::vector<double> thetas{0.5, 1.0, 2.0, 4.0};
  const RiskReport pi0_risk =
      kl_risk_scan(30, 20, 2, thetas, pi0_spacing_predictive(30, 20, 2),
                   outer, inner, 601);
  const RiskReport plug_risk =
      kl_risk_scan(30, 20, 2, thetas, plugin_spacing_predictive(30, 20, 2),
                   outer, inner, 602);

  bool constant = true;
  for (std::size_t i = 0; i < thetas.size(); ++i)
    for (std::size_t j = i + 1; j < thetas.size(); ++j) {
      const double gap = std::abs(pi0_risk.risk[i] - pi0_risk.risk[j]);
      if (gap > 4.0 * std::hypot(pi0_risk.stderrs[i], pi0_risk.stderrs[j]))
        constant = false;
    }
  check("6-constancy", constant,
        fmt("pi0 risks %.5f/%.5f/%.5f/%.5f, stderr ~ %.5f", pi0_risk.risk[0],
            pi0_risk.risk[1], pi0_risk.risk[2], pi0_risk.risk[3],
            pi0_risk.stderrs[0]));

  bool dominated = true;
  double min_sigma = 1e300;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double gap = plug_risk.risk[i] - pi0_risk.risk[i];
    const double se = std::hypot(plug_risk.stderrs[i], pi0_risk.stderrs[i]);
    min_sigma = std::min(min_sigma, gap / se);
    if (!(gap > 4.0 * se)) dominated = false;
  }
  check("6-plugin-gap", dominated,
        fmt("plug-in minus pi0 risk, smallest gap %.1f sigma", min_sigma));
}

// --------------------------------------------------------------------------

void criterion7_pivotal_identity() {
  const int trials = 100000;
  const RatioFitReport next = ratio_density_check(
      30, 20, NextNTarget{2}, {1.0, 5.0}, trials, 701);
  double worst = 0.0;
  for (const auto& row : next.ks)
    for (double d : row) worst = std::max(worst, d);
  bool pass = worst < next.critical_one_sample;
  double worst_two = 0.0;
  for (double d : next.ks_between) worst_two = std::max(worst_two, d);
  pass = pass && worst_two < next.critical_two_sample;

  const RatioFitReport pair = ratio_density_check(
      30, 20, PairTarget{21, 30}, {1.0, 5.0}, trials, 702);
  double worst_pair = 0.0;
  for (const auto& row : pair.ks)
    for (double d : row) worst_pair = std::max(worst_pair, d);
  pass = pass && worst_pair < pair.critical_one_sample;

  check("7", pass,
        fmt("KS worst: next %.5f, pair %.5f vs critical %.5f; two-sample "
            "%.5f vs %.5f",
            worst, worst_pair, next.critical_one_sample, worst_two,
            next.critical_two_sample));
}

// --------------------------------------------------------------------------

void criterion8_determinism() {
  const CoverageReport cov1 = coverage_simulation(
      30, 20, PairTarget{21, 30}, pi0, 0.2, {1.0}, 5000, 801, 64);
  const CoverageReport cov2 = coverage_simulation(
      30, 20, PairTarget{21, 30}, pi0, 0.2, {1.0}, 5000, 801, 64);
  bool pass = to_csv(cov1) == to_csv(cov2) && to_json(cov1) == to_json(cov2);

  const RiskReport risk1 = kl_risk_scan(
      30, 20, 2, {1.0}, pi0_spacing_predictive(30, 20, 2), 2000, 100, 802);
  const RiskReport risk2 = kl_risk_scan(
      30, 20, 2, {1.0}, pi0_spacing_predictive(30, 20, 2), 2000, 100, 802);
  pass = pass && to_csv(risk1) == to_csv(risk2);

  const RatioFitReport fit1 =
      ratio_density_check(30, 20, NextNTarget{2}, {1.0, 2.0}, 5000, 803);
  const RatioFitReport fit2 =
      ratio_density_check(30, 20, NextNTarget{2}, {1.0, 2.0}, 5000, 803);
  pass = pass && fit1.ks == fit2.ks && fit1.ks_between == fit2.ks_between;

  cli::AnalysisConfig cfg;
  cfg.n = 30;
  cfg.m = 20;
  cfg.next_n = 2;
  cfg.trials = 3000;
  cfg.thetas = {1.0};
  cfg.seed = 804;
  const cli::CommandResult cli1 = cli::run_coverage(cfg);
  const cli::CommandResult cli2 = cli::run_coverage(cfg);
  pass = pass && cli1.csv == cli2.csv && cli1.json == cli2.json;

  check("8", pass, "simulation outputs byte-identical across reruns");
}

}  // namespace

int main() {
  criterion1_worked_example();
  criterion2_oracle_equivalence();
  criterion3_normalization();
  criterion4_credibility();
  criterion5_coverage();
  criterion6_kl_risk();
  criterion7_pivotal_identity();
  criterion8_determinism();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures;
}

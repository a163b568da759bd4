#include "censpred/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "censpred/numerics.hpp"

namespace censpred {

CensoredSample::CensoredSample(int n_, int m_, std::vector<double> values_)
    : n(n_), m(m_), values(std::move(values_)) {
  if (m < 1 || m >= n)
    throw std::invalid_argument("CensoredSample: need 1 <= m < n");
  if (static_cast<int>(values.size()) != m)
    throw std::invalid_argument("CensoredSample: need exactly m values");
  double prev = 0.0;
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("CensoredSample: values must be positive");
    if (v < prev)
      throw std::invalid_argument("CensoredSample: values must be sorted");
    prev = v;
  }
}

void validate_target(int n, int m, const PairTarget& t) {
  if (!(m < t.r && t.r < t.s && t.s <= n))
    throw std::invalid_argument("PairTarget: need m < r < s <= n");
}

void validate_target(int n, int m, const NextNTarget& t) {
  if (!(t.count >= 1 && t.count <= n - m))
    throw std::invalid_argument("NextNTarget: need 1 <= N <= n - m");
}

double sufficient_statistic(const CensoredSample& s) {
  if (s.values.empty())
    throw std::invalid_argument("sufficient_statistic: empty sample");
  const double total = neumaier_sum(s.values);
  return total + static_cast<double>(s.n - s.m) * s.values.back();
}

std::vector<double> model_spacing_rates(int n, int m, int N) {
  validate_target(n, m, NextNTarget{N});
  std::vector<double> rates(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i)
    rates[static_cast<std::size_t>(i - 1)] = static_cast<double>(n - m - i + 1);
  return rates;
}

double model_density_pair(int n, int m, int r, int s, double theta, double y1,
                          double y2) {
  validate_target(n, m, PairTarget{r, s});
  if (!(theta > 0.0))
    throw std::domain_error("model_density_pair: theta must be > 0");
  if (y1 < 0.0 || y2 < 0.0)
    throw std::domain_error("model_density_pair: y must be >= 0");

  const double u1 = theta * y1, u2 = theta * y2;
  const int p1 = r - m - 1, p2 = s - r - 1;
  // (1-e^{-u})^p with the 0^0 = 1 convention at p = 0
  if ((p1 > 0 && u1 == 0.0) || (p2 > 0 && u2 == 0.0)) return 0.0;
  double lg = std::lgamma(n - m + 1.0) - std::lgamma(r - m + 0.0) -
              std::lgamma(s - r + 0.0) - std::lgamma(n - s + 1.0);
  lg += 2.0 * std::log(theta);
  if (p1 > 0) lg += p1 * std::log(-std::expm1(-u1));
  if (p2 > 0) lg += p2 * std::log(-std::expm1(-u2));
  lg += -(n - r + 1.0) * u1 - (n - s + 1.0) * u2;
  return std::exp(lg);
}

Experiment simulate_experiment(int n, int m, double theta, Rng& rng) {
  if (m < 1 || m >= n)
    throw std::invalid_argument("simulate_experiment: need 1 <= m < n");
  if (!(theta > 0.0))
    throw std::domain_error("simulate_experiment: theta must be > 0");
  std::vector<double> lifetimes(static_cast<std::size_t>(n));
  for (double& t : lifetimes) t = rng.exponential(theta);
  std::sort(lifetimes.begin(), lifetimes.end());
  std::vector<double> observed(lifetimes.begin(),
                               lifetimes.begin() + m);
  std::vector<double> future(lifetimes.begin() + m, lifetimes.end());
  return Experiment{CensoredSample(n, m, std::move(observed)),
                    std::move(future)};
}

}  // namespace censpred

#ifndef CENSPRED_MODEL_HPP
#define CENSPRED_MODEL_HPP

#include <variant>
#include <vector>

#include "censpred/random.hpp"

namespace censpred {

/// A type-II censored sample: of n exponential lifetimes only the first m
/// order statistics were observed. `values` must be sorted nondecreasing and
/// strictly positive; unsorted input is rejected rather than silently sorted
/// (the CSV ingestion path sorts explicitly and says so).
struct CensoredSample {
  int n = 0;
  int m = 0;
  std::vector<double> values;

  CensoredSample(int n, int m, std::vector<double> values);
};

/// Prediction target: the pair of future order statistics (X_{r:n}, X_{s:n}),
/// handled through the spacings Y1 = X_{r:n} - X_{m:n}, Y2 = X_{s:n} - X_{r:n}.
struct PairTarget {
  int r = 0;
  int s = 0;
};

/// Prediction target: spacings Z_i = X_{m+i:n} - X_{m+i-1:n} of the next
/// `count` future order statistics (count = 1 is the degenerate case).
struct NextNTarget {
  int count = 0;
};

using PredictionTarget = std::variant<NextNTarget, PairTarget>;

void validate_target(int n, int m, const PairTarget& t);
void validate_target(int n, int m, const NextNTarget& t);

/// Total time on test: sum of observed values plus (n-m) times the largest.
/// Gamma(m, theta) distributed under the model.
double sufficient_statistic(const CensoredSample& s);

/// Rate multipliers of theta for the next-N spacings: Z_i ~ Exp((n-m-i+1) theta).
std::vector<double> model_spacing_rates(int n, int m, int N);

/// Joint model density of (Y1, Y2) at fixed theta,
/// theta^2 * q1(theta y1, theta y2) with
/// q1(y) = (n-m)! / ((r-m-1)!(s-r-1)!(n-s)!) *
///         (1-e^{-y1})^{r-m-1} (1-e^{-y2})^{s-r-1} e^{-(n-r+1)y1-(n-s+1)y2}.
double model_density_pair(int n, int m, int r, int s, double theta, double y1,
                          double y2);

struct Experiment {
  CensoredSample sample;
  std::vector<double> future;  // X_{m+1:n} .. X_{n:n}
};

/// Draws n iid Exp(theta) lifetimes, sorts them, and splits at index m.
Experiment simulate_experiment(int n, int m, double theta, Rng& rng);

}  // namespace censpred

#endif  // CENSPRED_MODEL_HPP

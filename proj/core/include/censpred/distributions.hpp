#ifndef CENSPRED_DISTRIBUTIONS_HPP
#define CENSPRED_DISTRIBUTIONS_HPP

#include <span>
#include <vector>

#include "censpred/random.hpp"

namespace censpred {

/// Pareto type II distribution on (0, inf) with density
///   shape * rate / (1 + rate * t)^(shape + 1)
/// and survival (1 + rate * t)^(-shape). 1/rate is the scale, in time units.
class ParetoII {
 public:
  ParetoII(double shape, double rate);

  double shape() const { return shape_; }
  double rate() const { return rate_; }

  double pdf(double t) const;
  double log_pdf(double t) const;
  double sf(double t) const;
  double cdf(double t) const;
  /// Closed-form survival inversion: the t with cdf(t) = p.
  double quantile(double p) const;
  /// Exists for shape > 1 only.
  double mean() const;

 private:
  double shape_;
  double rate_;
};

/// Multivariate Pareto type II distribution with density
///   (m)_N * prod(h_i) / (1 + sum h_i z_i)^(m + N)
/// on the positive orthant, (m)_N the rising factorial. Marginals are
/// ParetoII(m, h_i); N = 1 coincides with ParetoII.
class MultiParetoII {
 public:
  MultiParetoII(double shape, std::vector<double> rates);

  double shape() const { return shape_; }
  const std::vector<double>& rates() const { return rates_; }
  int dim() const { return static_cast<int>(rates_.size()); }

  double pdf(std::span<const double> z) const;
  double log_pdf(std::span<const double> z) const;
  /// Joint survival P(Z_i >= z_i for all i) = (1 + sum h_i z_i)^(-m).
  double survival(std::span<const double> z) const;
  ParetoII marginal(int i) const;
  /// Distribution of Z_j given Z_i = z_i: ParetoII(m+1, h_j/(1+h_i z_i)).
  ParetoII conditional(int i, int j, double z_i) const;

  /// One draw (E_1/(h_1 G), ..., E_N/(h_N G)) with E_i ~ Exp(1) and
  /// G ~ Gamma(m, 1); G is drawn first, then E_1..E_N.
  void sample(Rng& rng, std::span<double> out) const;
  /// `count` independent draws, row-major count x N.
  std::vector<double> sample_matrix(Rng& rng, int count) const;

 private:
  double shape_;
  std::vector<double> rates_;
  double log_norm_;  // log((m)_N * prod h_i)
};

/// Beta type II (beta prime) distribution with density
///   w^(a-1) / (B(a,b) * (1+w)^(a+b)),
/// the law of a ratio of independent Gamma(a,1) and Gamma(b,1) variables.
class BetaTypeII {
 public:
  BetaTypeII(double shape1, double shape2);

  double shape1() const { return a_; }
  double shape2() const { return b_; }

  double pdf(double w) const;
  /// P(W <= c) through the regularized incomplete beta at c/(1+c).
  double cdf(double c) const;
  /// Inverse CDF by doubling bracket from 1 and bisection to relative
  /// tolerance 1e-12 (at most 200 iterations).
  double quantile(double p) const;

 private:
  double a_;
  double b_;
};

}  // namespace censpred

#endif  // CENSPRED_DISTRIBUTIONS_HPP

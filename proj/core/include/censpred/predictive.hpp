#ifndef CENSPRED_PREDICTIVE_HPP
#define CENSPRED_PREDICTIVE_HPP

#include <array>
#include <vector>

#include "censpred/distributions.hpp"
#include "censpred/random.hpp"

namespace censpred {

/// Gamma prior G(alpha, beta) on the exponential rate; (0,0) encodes the
/// non-informative prior 1/theta.
struct GammaPrior {
  double alpha = 0.0;
  double beta = 0.0;

  bool noninformative() const { return alpha == 0.0 && beta == 0.0; }
};

struct PosteriorGamma {
  double shape = 0.0;  // alpha + m
  double rate = 0.0;   // x + beta
};

/// Posterior of the exponential rate given the sufficient statistic x from
/// m observed failures: Gamma(alpha + m, x + beta).
PosteriorGamma posterior(const GammaPrior& prior, double x, int m);

/// Signed weights gamma_{c,d,k}, k = 0..d-1, that arise from the binomial
/// expansion of the Beta integral; they always sum to one.
///
/// For integer c the weights are exact signed integers
///   (-1)^k C(c+d-1, c+k) C(c+k-1, k)
/// and are computed in exact integer arithmetic (this matters: the
/// alternating sums reach ~1e16 and log-gamma evaluation would lose the
/// normalization). Non-integer c falls back to a log-gamma evaluation.
struct GammaWeightSet {
  double c = 0.0;
  int d = 0;
  std::vector<double> weights;
  bool exact = false;  // integer-c path

  /// Sum of the weights: exactly 1 on the integer path, a compensated
  /// descending-magnitude sum otherwise.
  double weight_sum() const;
  /// Sum of |weights|; large values flag cancellation-prone sets.
  double condition() const;
};

GammaWeightSet gamma_weights(double c, int d);

/// Signed mixture of univariate Pareto II components. The weights sum to 1
/// but may be negative; the mixture is nonetheless a genuine density.
struct ParetoMixture1D {
  std::vector<double> weights;
  std::vector<ParetoII> components;

  double pdf(double t) const;
  double sf(double t) const;
  double cdf(double t) const { return 1.0 - sf(t); }
  double mean() const;  // requires every component shape > 1
  double weight_sum() const;
  double condition() const;
};

/// The predictive density of the pair of spacings (Y1, Y2) for future order
/// statistics r < s: a signed mixture of bivariate Pareto II components
///   sum_{i,j} w1_i w2_j P2(shape, a_i/scale, b_j/scale),
/// a_i = n-r+i+1, b_j = n-s+j+1, shape = m+alpha, scale = x+beta.
///
/// Pointwise evaluation switches to the integral representation (adaptive
/// quadrature over the rate) once the weight condition number exceeds
/// `kappa_threshold`, where the alternating mixture sum cancels
/// catastrophically.
class SignedParetoMixture {
 public:
  static constexpr double kappa_threshold = 1e8;

  SignedParetoMixture(const GammaPrior& prior, double x, int n, int m, int r,
                      int s);

  int n() const { return n_; }
  int m() const { return m_; }
  int r() const { return r_; }
  int s() const { return s_; }
  const GammaPrior& prior() const { return prior_; }
  double x() const { return x_; }
  double shape() const { return shape_; }
  double scale() const { return scale_; }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  const GammaWeightSet& row_weights() const { return w1_; }
  const GammaWeightSet& col_weights() const { return w2_; }

  double weight(int i, int j) const;
  double weight_sum() const;
  /// kappa = sum_{i,j} |w_ij| = condition(w1) * condition(w2).
  double condition() const;
  bool degraded() const { return condition() > kappa_threshold; }

  /// Mixture evaluation with quadrature fallback when degraded().
  double pdf(double y1, double y2) const;
  /// Direct signed-mixture path (descending-magnitude compensated sum).
  double pdf_mixture(double y1, double y2) const;
  /// Integral representation over the rate; tolerance 1e-10.
  double pdf_quadrature(double y1, double y2) const;

  /// One draw by composition: rate from the posterior, then the spacings
  /// through their conditional Beta representation. Exact; avoids sampling
  /// from the signed mixture.
  std::array<double, 2> sample(Rng& rng) const;

 private:
  GammaPrior prior_;
  double x_;
  int n_, m_, r_, s_;
  double shape_, scale_;
  std::vector<double> a_, b_;
  GammaWeightSet w1_, w2_;
};

/// Predictive density of the next N spacings: a single multivariate Pareto
/// P2(m+alpha, h_i) with h_i = (n-m-i+1)/(x+beta).
MultiParetoII predictive_next_n(const GammaPrior& prior, double x, int n,
                                int m, int N);

SignedParetoMixture predictive_pair(const GammaPrior& prior, double x, int n,
                                    int m, int r, int s);

/// Marginal of Y1: weights gamma_{n-r+1, r-m, i}, components
/// ParetoII(m+alpha, a_i/(x+beta)). A single Pareto II when r = m+1.
ParetoMixture1D marginal_y1(const SignedParetoMixture& mix);
/// Marginal of Y2, by the symmetric expansion.
ParetoMixture1D marginal_y2(const SignedParetoMixture& mix);

/// Conditional of Y2 given Y1 = y1: components
/// ParetoII(m+alpha+1, b_j/(x+beta+a_i*y1)) with weights alpha_i(y1)*beta_j.
ParetoMixture1D conditional_y2_given_y1(const SignedParetoMixture& mix,
                                        double y1);
/// Conditional of Y1 given Y2 = y2 (roles swapped).
ParetoMixture1D conditional_y1_given_y2(const SignedParetoMixture& mix,
                                        double y2);

/// E(Y1 | x); requires m + alpha > 1.
double mean_y1(const SignedParetoMixture& mix);
/// E(Y2 | Y1 = y1, x); affine in y1 when r = m+1.
double conditional_mean_y2(const SignedParetoMixture& mix, double y1);

/// Numerical mode search on the pair predictive (pattern search from the
/// conditional-mean ridge). No unimodality guarantee; returns a local mode.
std::array<double, 2> find_mode(const SignedParetoMixture& mix);

}  // namespace censpred

#endif  // CENSPRED_PREDICTIVE_HPP

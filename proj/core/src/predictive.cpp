#include "censpred/predictive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "censpred/model.hpp"
#include "censpred/numerics.hpp"
#include "censpred/quadrature.hpp"

namespace censpred {

namespace {

void check_prior(const GammaPrior& prior) {
  if (prior.alpha < 0.0 || prior.beta < 0.0 ||
      !std::isfinite(prior.alpha) || !std::isfinite(prior.beta))
    throw std::domain_error("GammaPrior: alpha and beta must be >= 0");
}

bool is_integral(double c) { return c == std::floor(c); }

// Pascal triangle of exact binomial coefficients in __int128; rows up to 62
// stay below 2^63 so every entry is exact.
constexpr int kMaxExactRow = 62;

__int128 binomial_exact(int nn, int kk) {
  static const auto table = [] {
    std::vector<std::vector<__int128>> t(kMaxExactRow + 1);
    for (int row = 0; row <= kMaxExactRow; ++row) {
      t[row].assign(row + 1, 1);
      for (int col = 1; col < row; ++col)
        t[row][col] = t[row - 1][col - 1] + t[row - 1][col];
    }
    return t;
  }();
  if (kk < 0 || kk > nn) return 0;
  return table[nn][kk];
}

}  // namespace

PosteriorGamma posterior(const GammaPrior& prior, double x, int m) {
  check_prior(prior);
  if (!(x > 0.0)) throw std::domain_error("posterior: x must be > 0");
  if (m < 1) throw std::invalid_argument("posterior: m must be >= 1");
  const double shape = prior.alpha + m;
  if (!(shape > 0.0))
    throw std::domain_error("posterior: improper posterior, alpha + m == 0");
  return PosteriorGamma{shape, x + prior.beta};
}

// ---------------------------------------------------------------------------
// gamma weights

GammaWeightSet gamma_weights(double c, int d) {
  if (!(c > 0.0)) throw std::domain_error("gamma_weights: c must be > 0");
  if (d < 1) throw std::invalid_argument("gamma_weights: d must be >= 1");
  GammaWeightSet out;
  out.c = c;
  out.d = d;
  out.weights.resize(static_cast<std::size_t>(d));
  const int ci = static_cast<int>(c);
  if (is_integral(c) && ci + d - 1 <= kMaxExactRow) {
    out.exact = true;
    for (int k = 0; k < d; ++k) {
      const __int128 w =
          binomial_exact(ci + d - 1, ci + k) * binomial_exact(ci + k - 1, k);
      out.weights[static_cast<std::size_t>(k)] =
          (k % 2 ? -1.0 : 1.0) * static_cast<double>(w);
    }
  } else {
    out.exact = false;
    const double lead = std::lgamma(c + d) - std::lgamma(c);
    for (int k = 0; k < d; ++k) {
      const double lw = lead - std::lgamma(k + 1.0) -
                        std::lgamma(d - k + 0.0) - std::log(c + k);
      out.weights[static_cast<std::size_t>(k)] =
          (k % 2 ? -1.0 : 1.0) * std::exp(lw);
    }
  }
  return out;
}

double GammaWeightSet::weight_sum() const {
  if (exact) {
    // re-accumulate in exact integer arithmetic
    __int128 s = 0;
    for (double w : weights) s += static_cast<__int128>(w);
    return static_cast<double>(s);
  }
  std::vector<double> terms(weights.begin(), weights.end());
  return sum_descending_magnitude(std::move(terms));
}

double GammaWeightSet::condition() const {
  double s = 0.0;
  for (double w : weights) s += std::abs(w);
  return s;
}

// ---------------------------------------------------------------------------
// 1D signed Pareto mixtures

double ParetoMixture1D::pdf(double t) const {
  std::vector<double> terms(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    terms[i] = weights[i] * components[i].pdf(t);
  return sum_descending_magnitude(std::move(terms));
}

double ParetoMixture1D::sf(double t) const {
  std::vector<double> terms(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    terms[i] = weights[i] * components[i].sf(t);
  return sum_descending_magnitude(std::move(terms));
}

double ParetoMixture1D::mean() const {
  std::vector<double> terms(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    terms[i] = weights[i] * components[i].mean();
  return sum_descending_magnitude(std::move(terms));
}

double ParetoMixture1D::weight_sum() const {
  std::vector<double> terms(weights.begin(), weights.end());
  return sum_descending_magnitude(std::move(terms));
}

double ParetoMixture1D::condition() const {
  double s = 0.0;
  for (double w : weights) s += std::abs(w);
  return s;
}

// ---------------------------------------------------------------------------
// pair predictive

SignedParetoMixture::SignedParetoMixture(const GammaPrior& prior, double x,
                                         int n, int m, int r, int s)
    : prior_(prior), x_(x), n_(n), m_(m), r_(r), s_(s) {
  check_prior(prior);
  validate_target(n, m, PairTarget{r, s});
  if (!(x > 0.0))
    throw std::domain_error("SignedParetoMixture: x must be > 0");
  shape_ = prior.alpha + m;
  scale_ = x + prior.beta;
  if (!(shape_ > 0.0))
    throw std::domain_error("SignedParetoMixture: alpha + m must be > 0");
  a_.resize(static_cast<std::size_t>(r - m));
  for (int i = 0; i < r - m; ++i)
    a_[static_cast<std::size_t>(i)] = static_cast<double>(n - r + i + 1);
  b_.resize(static_cast<std::size_t>(s - r));
  for (int j = 0; j < s - r; ++j)
    b_[static_cast<std::size_t>(j)] = static_cast<double>(n - s + j + 1);
  w1_ = gamma_weights(static_cast<double>(n - r + 1), r - m);
  w2_ = gamma_weights(static_cast<double>(n - s + 1), s - r);
}

double SignedParetoMixture::weight(int i, int j) const {
  return w1_.weights[static_cast<std::size_t>(i)] *
         w2_.weights[static_cast<std::size_t>(j)];
}

double SignedParetoMixture::weight_sum() const {
  // the double sum factorizes, so each factor can be accumulated exactly
  return w1_.weight_sum() * w2_.weight_sum();
}

double SignedParetoMixture::condition() const {
  return w1_.condition() * w2_.condition();
}

double SignedParetoMixture::pdf_mixture(double y1, double y2) const {
  if (y1 < 0.0 || y2 < 0.0)
    throw std::domain_error("SignedParetoMixture pdf: y must be >= 0");
  // evaluate on u = y/scale so the whole sum is scale-free up to the 1/scale^2
  // Jacobian; this keeps the scale-equivariance identity exact to rounding
  const double u1 = y1 / scale_, u2 = y2 / scale_;
  const double log_shape = std::log(shape_) + std::log(shape_ + 1.0);
  std::vector<double> terms;
  terms.reserve(a_.size() * b_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t j = 0; j < b_.size(); ++j) {
      const double lg = log_shape + std::log(a_[i]) + std::log(b_[j]) -
                        (shape_ + 2.0) * std::log1p(a_[i] * u1 + b_[j] * u2);
      terms.push_back(w1_.weights[i] * w2_.weights[j] * std::exp(lg));
    }
  }
  return sum_descending_magnitude(std::move(terms)) / (scale_ * scale_);
}

double SignedParetoMixture::pdf_quadrature(double y1, double y2) const {
  if (y1 < 0.0 || y2 < 0.0)
    throw std::domain_error("SignedParetoMixture pdf: y must be >= 0");
  const int p1 = r_ - m_ - 1, p2 = s_ - r_ - 1;
  if ((p1 > 0 && y1 == 0.0) || (p2 > 0 && y2 == 0.0)) return 0.0;
  const double big_l = (n_ - r_ + 1.0) * y1 + (n_ - s_ + 1.0) * y2;
  const double log_c = std::lgamma(n_ - m_ + 1.0) - std::lgamma(n_ - s_ + 1.0) -
                       std::lgamma(r_ - m_ + 0.0) - std::lgamma(s_ - r_ + 0.0) +
                       shape_ * std::log(scale_) - std::lgamma(shape_);
  const auto integrand = [&](double th) {
    if (th <= 0.0) return 0.0;
    double lg = log_c + (shape_ + 1.0) * std::log(th) -
                th * (big_l + scale_);
    if (p1 > 0) lg += p1 * std::log(-std::expm1(-th * y1));
    if (p2 > 0) lg += p2 * std::log(-std::expm1(-th * y2));
    return std::exp(lg);
  };
  const double peak_scale = (shape_ + 2.0) / (big_l + scale_);
  return integrate_semi_infinite(integrand, peak_scale, 1e-10);
}

double SignedParetoMixture::pdf(double y1, double y2) const {
  return degraded() ? pdf_quadrature(y1, y2) : pdf_mixture(y1, y2);
}

std::array<double, 2> SignedParetoMixture::sample(Rng& rng) const {
  const double theta = rng.gamma(shape_) / scale_;
  const double v1 = rng.beta(static_cast<double>(n_ - r_ + 1),
                             static_cast<double>(r_ - m_));
  const double v2 = rng.beta(static_cast<double>(n_ - s_ + 1),
                             static_cast<double>(s_ - r_));
  return {-std::log(v1) / theta, -std::log(v2) / theta};
}

MultiParetoII predictive_next_n(const GammaPrior& prior, double x, int n,
                                int m, int N) {
  check_prior(prior);
  validate_target(n, m, NextNTarget{N});
  if (!(x > 0.0)) throw std::domain_error("predictive_next_n: x must be > 0");
  const double shape = prior.alpha + m;
  if (!(shape > 0.0))
    throw std::domain_error("predictive_next_n: alpha + m must be > 0");
  std::vector<double> rates = model_spacing_rates(n, m, N);
  for (double& h : rates) h /= (x + prior.beta);
  return MultiParetoII(shape, std::move(rates));
}

SignedParetoMixture predictive_pair(const GammaPrior& prior, double x, int n,
                                    int m, int r, int s) {
  return SignedParetoMixture(prior, x, n, m, r, s);
}

// ---------------------------------------------------------------------------
// marginals, conditionals, moments

ParetoMixture1D marginal_y1(const SignedParetoMixture& mix) {
  ParetoMixture1D out;
  out.weights = mix.row_weights().weights;
  out.components.reserve(mix.a().size());
  for (double ai : mix.a())
    out.components.emplace_back(mix.shape(), ai / mix.scale());
  return out;
}

ParetoMixture1D marginal_y2(const SignedParetoMixture& mix) {
  ParetoMixture1D out;
  out.weights = mix.col_weights().weights;
  out.components.reserve(mix.b().size());
  for (double bj : mix.b())
    out.components.emplace_back(mix.shape(), bj / mix.scale());
  return out;
}

namespace {

// normalized signed weights proportional to g_k * f_k(t), with the Pareto
// log-densities centred before exponentiation
std::vector<double> slice_weights(const std::vector<double>& g,
                                  const std::vector<ParetoII>& comps,
                                  double t) {
  std::vector<double> lf(comps.size());
  double lmax = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    lf[k] = comps[k].log_pdf(t);
    lmax = std::max(lmax, lf[k]);
  }
  std::vector<double> u(comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k)
    u[k] = g[k] * std::exp(lf[k] - lmax);
  std::vector<double> terms = u;
  const double total = sum_descending_magnitude(std::move(terms));
  if (!(total > 0.0))
    throw NumericalError(
        "conditional weights: marginal density vanished at the slice point");
  for (double& v : u) v /= total;
  return u;
}

}  // namespace

ParetoMixture1D conditional_y2_given_y1(const SignedParetoMixture& mix,
                                        double y1) {
  if (y1 < 0.0)
    throw std::domain_error("conditional_y2_given_y1: y1 must be >= 0");
  const ParetoMixture1D marg = marginal_y1(mix);
  const std::vector<double> alpha =
      slice_weights(marg.weights, marg.components, y1);
  ParetoMixture1D out;
  out.weights.reserve(alpha.size() * mix.b().size());
  out.components.reserve(alpha.size() * mix.b().size());
  for (std::size_t i = 0; i < mix.a().size(); ++i) {
    const double denom = mix.scale() + mix.a()[i] * y1;
    for (std::size_t j = 0; j < mix.b().size(); ++j) {
      out.weights.push_back(alpha[i] * mix.col_weights().weights[j]);
      out.components.emplace_back(mix.shape() + 1.0, mix.b()[j] / denom);
    }
  }
  return out;
}

ParetoMixture1D conditional_y1_given_y2(const SignedParetoMixture& mix,
                                        double y2) {
  if (y2 < 0.0)
    throw std::domain_error("conditional_y1_given_y2: y2 must be >= 0");
  const ParetoMixture1D marg = marginal_y2(mix);
  const std::vector<double> xi =
      slice_weights(marg.weights, marg.components, y2);
  ParetoMixture1D out;
  out.weights.reserve(xi.size() * mix.a().size());
  out.components.reserve(xi.size() * mix.a().size());
  for (std::size_t j = 0; j < mix.b().size(); ++j) {
    const double denom = mix.scale() + mix.b()[j] * y2;
    for (std::size_t i = 0; i < mix.a().size(); ++i) {
      out.weights.push_back(xi[j] * mix.row_weights().weights[i]);
      out.components.emplace_back(mix.shape() + 1.0, mix.a()[i] / denom);
    }
  }
  return out;
}

double mean_y1(const SignedParetoMixture& mix) {
  if (!(mix.shape() > 1.0))
    throw std::domain_error("mean_y1 requires m + alpha > 1");
  std::vector<double> terms(mix.a().size());
  for (std::size_t i = 0; i < mix.a().size(); ++i)
    terms[i] = mix.row_weights().weights[i] / mix.a()[i];
  return mix.scale() / (mix.shape() - 1.0) *
         sum_descending_magnitude(std::move(terms));
}

double conditional_mean_y2(const SignedParetoMixture& mix, double y1) {
  const ParetoMixture1D marg = marginal_y1(mix);
  const std::vector<double> alpha =
      slice_weights(marg.weights, marg.components, y1);
  // sum_{i,j} alpha_i beta_j (scale + a_i y1) / (shape * b_j) factorizes
  std::vector<double> ti(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    ti[i] = alpha[i] * (mix.scale() + mix.a()[i] * y1);
  std::vector<double> tj(mix.b().size());
  for (std::size_t j = 0; j < mix.b().size(); ++j)
    tj[j] = mix.col_weights().weights[j] / mix.b()[j];
  return sum_descending_magnitude(std::move(ti)) *
         sum_descending_magnitude(std::move(tj)) / mix.shape();
}

std::array<double, 2> find_mode(const SignedParetoMixture& mix) {
  const auto value = [&](double y1, double y2) {
    return (y1 < 0.0 || y2 < 0.0) ? -1.0 : mix.pdf(y1, y2);
  };
  // start on the conditional-mean ridge (or near the origin when the mean
  // does not exist)
  double y1 = mix.shape() > 1.0 ? mean_y1(mix) : mix.scale() / mix.a().back();
  double y2 = conditional_mean_y2(mix, y1);
  double best = value(y1, y2);
  double step = 0.5 * std::max({y1, y2, mix.scale() / mix.a().back()});
  for (int iter = 0; iter < 400 && step > 1e-12 * (1.0 + y1 + y2); ++iter) {
    bool moved = false;
    const double cand[4][2] = {{y1 + step, y2}, {y1 - step, y2},
                               {y1, y2 + step}, {y1, y2 - step}};
    for (const auto& c : cand) {
      const double v = value(std::max(c[0], 0.0), std::max(c[1], 0.0));
      if (v > best) {
        best = v;
        y1 = std::max(c[0], 0.0);
        y2 = std::max(c[1], 0.0);
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return {y1, y2};
}

}  // namespace censpred

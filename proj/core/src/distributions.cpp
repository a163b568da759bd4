#include "censpred/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <stdexcept>

#include "censpred/numerics.hpp"

namespace censpred {

namespace {

void check_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(name) + " must be a positive real");
}

}  // namespace

// ---------------------------------------------------------------------------
// ParetoII

ParetoII::ParetoII(double shape, double rate) : shape_(shape), rate_(rate) {
  check_positive(shape, "ParetoII shape");
  check_positive(rate, "ParetoII rate");
}

double ParetoII::log_pdf(double t) const {
  if (t < 0.0) throw std::domain_error("ParetoII pdf: t must be >= 0");
  return std::log(shape_) + std::log(rate_) -
         (shape_ + 1.0) * std::log1p(rate_ * t);
}

double ParetoII::pdf(double t) const { return std::exp(log_pdf(t)); }

double ParetoII::sf(double t) const {
  if (t < 0.0) throw std::domain_error("ParetoII sf: t must be >= 0");
  return std::exp(-shape_ * std::log1p(rate_ * t));
}

double ParetoII::cdf(double t) const {
  if (t < 0.0) throw std::domain_error("ParetoII cdf: t must be >= 0");
  return -std::expm1(-shape_ * std::log1p(rate_ * t));
}

double ParetoII::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("ParetoII quantile: p must be in (0,1)");
  // survival sf(t) = 1-p  =>  t = ((1-p)^(-1/shape) - 1) / rate
  return std::expm1(-std::log1p(-p) / shape_) / rate_;
}

double ParetoII::mean() const {
  if (!(shape_ > 1.0))
    throw std::domain_error("ParetoII mean requires shape > 1");
  return 1.0 / (rate_ * (shape_ - 1.0));
}

// ---------------------------------------------------------------------------
// MultiParetoII

MultiParetoII::MultiParetoII(double shape, std::vector<double> rates)
    : shape_(shape), rates_(std::move(rates)) {
  check_positive(shape, "MultiParetoII shape");
  if (rates_.empty())
    throw std::invalid_argument("MultiParetoII needs at least one rate");
  double log_rates = 0.0;
  for (double h : rates_) {
    check_positive(h, "MultiParetoII rate");
    log_rates += std::log(h);
  }
  const double n = static_cast<double>(dim());
  log_norm_ = std::lgamma(shape_ + n) - std::lgamma(shape_) + log_rates;
}

double MultiParetoII::log_pdf(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != dim())
    throw std::invalid_argument("MultiParetoII pdf: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) {
    if (z[i] < 0.0)
      throw std::domain_error("MultiParetoII pdf: components must be >= 0");
    s += rates_[static_cast<std::size_t>(i)] * z[i];
  }
  return log_norm_ - (shape_ + dim()) * std::log1p(s);
}

double MultiParetoII::pdf(std::span<const double> z) const {
  return std::exp(log_pdf(z));
}

double MultiParetoII::survival(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != dim())
    throw std::invalid_argument("MultiParetoII survival: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) {
    if (z[i] < 0.0)
      throw std::domain_error(
          "MultiParetoII survival: components must be >= 0");
    s += rates_[static_cast<std::size_t>(i)] * z[i];
  }
  return std::exp(-shape_ * std::log1p(s));
}

ParetoII MultiParetoII::marginal(int i) const {
  if (i < 0 || i >= dim())
    throw std::invalid_argument("MultiParetoII marginal: index out of range");
  return ParetoII(shape_, rates_[static_cast<std::size_t>(i)]);
}

ParetoII MultiParetoII::conditional(int i, int j, double z_i) const {
  if (i < 0 || i >= dim() || j < 0 || j >= dim())
    throw std::invalid_argument(
        "MultiParetoII conditional: index out of range");
  if (i == j)
    throw std::invalid_argument(
        "MultiParetoII conditional: indices must differ");
  if (z_i < 0.0)
    throw std::domain_error("MultiParetoII conditional: z_i must be >= 0");
  const double hi = rates_[static_cast<std::size_t>(i)];
  const double hj = rates_[static_cast<std::size_t>(j)];
  return ParetoII(shape_ + 1.0, hj / (1.0 + hi * z_i));
}

void MultiParetoII::sample(Rng& rng, std::span<double> out) const {
  if (static_cast<int>(out.size()) != dim())
    throw std::invalid_argument("MultiParetoII sample: dimension mismatch");
  const double g = rng.gamma(shape_);
  for (int i = 0; i < dim(); ++i)
    out[static_cast<std::size_t>(i)] =
        rng.exponential() / (rates_[static_cast<std::size_t>(i)] * g);
}

std::vector<double> MultiParetoII::sample_matrix(Rng& rng, int count) const {
  if (count < 1)
    throw std::invalid_argument("MultiParetoII sample_matrix: count >= 1");
  std::vector<double> out(static_cast<std::size_t>(count) *
                          static_cast<std::size_t>(dim()));
  for (int k = 0; k < count; ++k)
    sample(rng, std::span<double>(out).subspan(
                    static_cast<std::size_t>(k) *
                        static_cast<std::size_t>(dim()),
                    static_cast<std::size_t>(dim())));
  return out;
}

// ---------------------------------------------------------------------------
// BetaTypeII

BetaTypeII::BetaTypeII(double shape1, double shape2) : a_(shape1), b_(shape2) {
  check_positive(shape1, "BetaTypeII shape1");
  check_positive(shape2, "BetaTypeII shape2");
}

double BetaTypeII::pdf(double w) const {
  if (w < 0.0) throw std::domain_error("BetaTypeII pdf: w must be >= 0");
  if (w == 0.0) {
    if (a_ > 1.0) return 0.0;
    if (a_ == 1.0) return b_;  // limit a=1: b/(1+w)^(1+b) at w=0
    throw std::domain_error("BetaTypeII pdf diverges at 0 for shape1 < 1");
  }
  const double log_pdf = (a_ - 1.0) * std::log(w) -
                         (a_ + b_) * std::log1p(w) -
                         (std::lgamma(a_) + std::lgamma(b_) -
                          std::lgamma(a_ + b_));
  return std::exp(log_pdf);
}

double BetaTypeII::cdf(double c) const {
  if (c < 0.0) throw std::domain_error("BetaTypeII cdf: c must be >= 0");
  if (c == 0.0) return 0.0;
  // monotone substitution w/(1+w) maps (0,inf) to (0,1)
  return boost::math::ibeta(a_, b_, c / (1.0 + c));
}

double BetaTypeII::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("BetaTypeII quantile: p must be in (0,1)");
  const auto f = [this](double c) { return cdf(c); };
  double hi = bracket_by_doubling(f, p, 1.0);
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-12 * mid) return mid;
    if (cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace censpred

#ifndef CENSPRED_NUMERICS_HPP
#define CENSPRED_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace censpred {

/// Thrown when a solver or integrator cannot reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Kahan-Babuska-Neumaier compensated sum.
inline double neumaier_sum(std::span<const double> xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

/// Compensated sum of signed terms, accumulated in descending magnitude.
/// Used for alternating mixture weights where naive left-to-right
/// accumulation loses digits.
inline double sum_descending_magnitude(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  return neumaier_sum(terms);
}

struct RootResult {
  double x = 0.0;
  double residual = 0.0;  // f(x) - target
  int iterations = 0;
};

/// Root of f(x) = target for f nondecreasing, given a bracket [lo, hi] with
/// f(lo) <= target <= f(hi). Bisection; stops when |f - target| <= f_tol or
/// the bracket is narrower than x_rel_tol * |x|.
inline RootResult bisect_increasing(const std::function<double(double)>& f,
                                    double lo, double hi, double target,
                                    double f_tol, double x_rel_tol = 1e-15,
                                    int max_iter = 200) {
  RootResult res;
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    res.x = mid;
    res.residual = fm - target;
    if (std::abs(res.residual) <= f_tol) return res;
    if (hi - lo <= x_rel_tol * std::max(std::abs(mid), 1e-300)) return res;
    if (fm < target)
      lo = mid;
    else
      hi = mid;
  }
  return res;
}

/// Expands [0, start] upward by doubling until f(hi) >= target.
/// Throws NumericalError after max_doublings expansions.
inline double bracket_by_doubling(const std::function<double(double)>& f,
                                  double target, double start = 1.0,
                                  int max_doublings = 60) {
  double hi = start;
  for (int i = 0; i < max_doublings; ++i) {
    if (f(hi) >= target) return hi;
    hi *= 2.0;
  }
  throw NumericalError("bracket_by_doubling: target not bracketed after " +
                       std::to_string(max_doublings) + " doublings");
}

/// Survival function of the Kolmogorov distribution, Q(t) = P(K > t).
inline double kolmogorov_sf(double t) {
  if (t <= 0.0) return 1.0;
  double q = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = 2.0 * ((k % 2) ? 1.0 : -1.0) *
                        std::exp(-2.0 * k * k * t * t);
    q += term;
    if (std::abs(term) < 1e-16) break;
  }
  return std::min(1.0, std::max(0.0, q));
}

/// Upper critical value t with P(K > t) = alpha (asymptotic Kolmogorov law);
/// the one-sample KS critical statistic at level alpha is t / sqrt(n).
inline double kolmogorov_critical(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("kolmogorov_critical: alpha must be in (0,1)");
  double lo = 1e-8, hi = 5.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_sf(mid) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// One-sample KS statistic of `sorted_sample` against CDF `F`.
inline double ks_statistic(std::span<const double> sorted_sample,
                           const std::function<double(double)>& F) {
  const std::size_t n = sorted_sample.size();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = F(sorted_sample[i]);
    d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
    d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / n));
  }
  return d;
}

/// Two-sample KS statistic; both inputs sorted ascending. Ties advance both
/// empirical CDFs before the gap is measured.
inline double ks_two_sample(std::span<const double> a,
                            std::span<const double> b) {
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace censpred

#endif  // CENSPRED_NUMERICS_HPP

// Test-side numerical oracles, kept independent of the library's own
// integration and solver code paths: Romberg extrapolation here versus
// adaptive Simpson in core.
#ifndef CENSPRED_TESTS_ORACLE_HPP
#define CENSPRED_TESTS_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

/// Romberg integration on [a, b]; assumes a smooth integrand.
inline double romberg(const std::function<double(double)>& f, double a,
                      double b, double rel_tol = 1e-10, int max_level = 22) {
  std::vector<double> row(1, 0.5 * (b - a) * (f(a) + f(b)));
  double h = b - a;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    // refine the trapezoid with the new midpoints
    double mids = 0.0;
    const std::size_t count = std::size_t(1) << (level - 1);
    for (std::size_t k = 0; k < count; ++k)
      mids += f(a + (2.0 * k + 1.0) * h);
    std::vector<double> next(static_cast<std::size_t>(level) + 1);
    next[0] = 0.5 * row[0] + h * mids;
    double pow4 = 1.0;
    for (int j = 1; j <= level; ++j) {
      pow4 *= 4.0;
      next[static_cast<std::size_t>(j)] =
          (pow4 * next[static_cast<std::size_t>(j - 1)] -
           row[static_cast<std::size_t>(j - 1)]) /
          (pow4 - 1.0);
    }
    if (level >= 4) {
      const double est = next.back();
      const double prev = row.back();
      if (std::abs(est - prev) <=
          rel_tol * std::max(std::abs(est), 1e-300))
        return est;
    }
    row = std::move(next);
  }
  return row.back();
}

/// Integral over [0, inf) via t = scale * u / (1 - u).
inline double integral_half_line(const std::function<double(double)>& f,
                                 double scale, double rel_tol = 1e-10) {
  const auto g = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double om = 1.0 - u;
    const double v = f(scale * u / om) * scale / (om * om);
    return std::isfinite(v) ? v : 0.0;
  };
  return romberg(g, 0.0, 1.0, rel_tol);
}

/// Iterated 2D integral over [0, inf)^2.
inline double integral_quadrant(
    const std::function<double(double, double)>& f, double scale1,
    double scale2, double rel_tol = 1e-9) {
  const auto outer = [&](double t1) {
    return integral_half_line([&](double t2) { return f(t1, t2); }, scale2,
                              0.1 * rel_tol);
  };
  return integral_half_line(outer, scale1, rel_tol);
}

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

/// Sample mean with its Monte Carlo standard error.
inline MeanStderr mc_mean(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double s = 0.0;
  for (double x : xs) s += x;
  const double mean = s / n;
  double v = 0.0;
  for (double x : xs) v += (x - mean) * (x - mean);
  return {mean, std::sqrt(v / (n * (n - 1.0)))};
}

/// Batch-based standard error for statistics of heavy-tailed samples:
/// value of `stat` on each of `batches` equal slices.
inline MeanStderr batched(const std::vector<double>& xs, std::size_t batches,
                          const std::function<double(const std::vector<double>&)>& stat) {
  const std::size_t per = xs.size() / batches;
  std::vector<double> vals;
  for (std::size_t b = 0; b < batches; ++b) {
    std::vector<double> slice(xs.begin() + static_cast<std::ptrdiff_t>(b * per),
                              xs.begin() + static_cast<std::ptrdiff_t>((b + 1) * per));
    vals.push_back(stat(slice));
  }
  return mc_mean(vals);
}

}  // namespace oracle

#endif  // CENSPRED_TESTS_ORACLE_HPP

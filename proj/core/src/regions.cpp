#include "censpred/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "censpred/numerics.hpp"

namespace censpred {

namespace {

using nlohmann::json;

double interval_mass(const ParetoMixture1D& mix, double lo, double hi) {
  const double lo_c = std::max(lo, 0.0);
  if (hi <= lo_c) return 0.0;
  std::vector<double> terms(mix.weights.size());
  for (std::size_t k = 0; k < mix.weights.size(); ++k)
    terms[k] = mix.weights[k] *
               (mix.components[k].sf(lo_c) - mix.components[k].sf(hi));
  return sum_descending_magnitude(std::move(terms));
}

// interval of the requested form and credibility for a signed Pareto mixture
Interval solve_interval(const ParetoMixture1D& mix, double center,
                        double credibility, SliceForm form) {
  constexpr double cred_tol = 1e-10;
  switch (form) {
    case SliceForm::two_sided: {
      const auto mass = [&](double d) {
        return interval_mass(mix, center - d, center + d);
      };
      const double hi = bracket_by_doubling(mass, credibility, 1.0);
      const auto root = bisect_increasing(mass, 0.0, hi, credibility,
                                          cred_tol);
      return Interval{std::max(center - root.x, 0.0), center + root.x};
    }
    case SliceForm::upper_only: {
      const auto mass = [&](double d) { return interval_mass(mix, 0.0, d); };
      const double hi = bracket_by_doubling(mass, credibility, 1.0);
      const auto root = bisect_increasing(mass, 0.0, hi, credibility,
                                          cred_tol);
      return Interval{0.0, root.x};
    }
    case SliceForm::lower_only: {
      // sf is decreasing; solve on the complementary mass
      const auto mass = [&](double d) { return 1.0 - mix.sf(d); };
      const double hi = bracket_by_doubling(mass, 1.0 - credibility, 1.0);
      const auto root = bisect_increasing(mass, 0.0, hi, 1.0 - credibility,
                                          cred_tol);
      return Interval{root.x, std::numeric_limits<double>::infinity()};
    }
  }
  throw std::logic_error("solve_interval: unknown form");
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::domain_error("lambda must be in (0,1)");
}

std::string frame_name(Frame f) {
  return f == Frame::spacings ? "spacings" : "order_statistics";
}

Frame frame_from_name(const std::string& s) {
  if (s == "spacings") return Frame::spacings;
  if (s == "order_statistics") return Frame::order_statistics;
  throw std::invalid_argument("unknown frame tag: " + s);
}

}  // namespace

// ---------------------------------------------------------------------------
// half-space regions

bool HalfSpaceRegion::contains(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != dim())
    throw std::invalid_argument("HalfSpaceRegion contains: dimension mismatch");
  std::vector<double> z(point.begin(), point.end());
  if (frame == Frame::order_statistics) {
    // recover spacings: z_1 = t_1 - x_{m:n}, z_k = t_k - t_{k-1}
    double prev = shift;
    for (double& v : z) {
      const double t = v;
      v = t - prev;
      prev = t;
    }
  }
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) {
    if (z[static_cast<std::size_t>(i)] < 0.0) return false;
    s += coefficients[static_cast<std::size_t>(i)] *
         z[static_cast<std::size_t>(i)];
  }
  return s <= bound;
}

HalfSpaceRegion hpd_region(const GammaPrior& prior, double x, int n, int m,
                           int N, double lambda) {
  check_lambda(lambda);
  const PosteriorGamma post = posterior(prior, x, m);
  validate_target(n, m, NextNTarget{N});
  const BetaTypeII w(static_cast<double>(N), post.shape);
  const double c0 = w.quantile(1.0 - lambda);
  HalfSpaceRegion region;
  region.frame = Frame::spacings;
  region.lambda = lambda;
  region.coefficients = model_spacing_rates(n, m, N);
  region.scale = post.rate;
  region.shape = post.shape;
  region.bound = c0 * post.rate;
  return region;
}

double hpd_credibility(const HalfSpaceRegion& region) {
  const BetaTypeII w(static_cast<double>(region.dim()), region.shape);
  return w.cdf(region.bound / region.scale);
}

// ---------------------------------------------------------------------------
// band regions

Interval BandRegion::slice_at(double y1) const {
  if (y1 < a.lo || y1 > a.hi)
    throw std::domain_error("BandRegion slice_at: y1 outside A");
  if (grid.size() < 2) return slices.front();
  const auto it = std::upper_bound(grid.begin(), grid.end(), y1);
  std::size_t k = static_cast<std::size_t>(
      std::clamp<std::ptrdiff_t>(it - grid.begin() - 1, 0,
                                 static_cast<std::ptrdiff_t>(grid.size()) - 2));
  const double h = grid[k + 1] - grid[k];
  const double t = h > 0.0 ? (y1 - grid[k]) / h : 0.0;
  return Interval{slices[k].lo + t * (slices[k + 1].lo - slices[k].lo),
                  slices[k].hi + t * (slices[k + 1].hi - slices[k].hi)};
}

bool BandRegion::contains(double p1, double p2) const {
  if (p1 < a.lo || p1 > a.hi) return false;
  const Interval b = slice_at(p1);
  return p2 >= b.lo && p2 <= b.hi;
}

Interval step1_interval(const GammaPrior& prior, double x, int n, int m,
                        int r, int s, double lambda) {
  check_lambda(lambda);
  const SignedParetoMixture mix = predictive_pair(prior, x, n, m, r, s);
  if (!(mix.shape() > 1.0))
    throw std::domain_error("step1_interval requires m + alpha > 1");
  return solve_interval(marginal_y1(mix), mean_y1(mix),
                        std::sqrt(1.0 - lambda), SliceForm::two_sided);
}

Interval step2_interval(const GammaPrior& prior, double x, int n, int m,
                        int r, int s, double lambda, double y1) {
  check_lambda(lambda);
  const SignedParetoMixture mix = predictive_pair(prior, x, n, m, r, s);
  return solve_interval(conditional_y2_given_y1(mix, y1),
                        conditional_mean_y2(mix, y1),
                        std::sqrt(1.0 - lambda), SliceForm::two_sided);
}

double band_grid_node(const Interval& a, int grid_size, int k) {
  return a.lo + (a.hi - a.lo) * static_cast<double>(k) /
                    static_cast<double>(grid_size - 1);
}

BandRegion build_band_region(const GammaPrior& prior, double x, int n, int m,
                             int r, int s, double lambda,
                             const BandOptions& options) {
  check_lambda(lambda);
  if (options.grid_size < 2)
    throw std::invalid_argument("build_band_region: grid_size must be >= 2");
  double cred1 = std::sqrt(1.0 - lambda), cred2 = cred1;
  if (options.lambda1 >= 0.0 || options.lambda2 >= 0.0) {
    check_lambda(options.lambda1);
    check_lambda(options.lambda2);
    cred1 = 1.0 - options.lambda1;
    cred2 = 1.0 - options.lambda2;
    if (std::abs(cred1 * cred2 - (1.0 - lambda)) > 1e-12)
      throw std::invalid_argument(
          "build_band_region: need (1-lambda1)(1-lambda2) = 1-lambda");
  }
  const SignedParetoMixture mix = predictive_pair(prior, x, n, m, r, s);
  if (!(mix.shape() > 1.0))
    throw std::domain_error("build_band_region requires m + alpha > 1");

  BandRegion band;
  band.frame = Frame::spacings;
  band.lambda = lambda;
  band.slice_credibility = cred2;
  band.a = solve_interval(marginal_y1(mix), mean_y1(mix), cred1,
                          options.step1_form);
  band.grid.resize(static_cast<std::size_t>(options.grid_size));
  band.slices.resize(static_cast<std::size_t>(options.grid_size));
  // the slices are mutually independent; computed in grid order so
  // the output does not depend on scheduling
  for (int k = 0; k < options.grid_size; ++k) {
    const double y1 = band_grid_node(band.a, options.grid_size, k);
    band.grid[static_cast<std::size_t>(k)] = y1;
    band.slices[static_cast<std::size_t>(k)] =
        solve_interval(conditional_y2_given_y1(mix, y1),
                       conditional_mean_y2(mix, y1), cred2,
                       options.step2_form);
  }
  return band;
}

BandRegion build_band_region(const GammaPrior& prior, double x, int n, int m,
                             int r, int s, double lambda, int grid_size) {
  BandOptions options;
  options.grid_size = grid_size;
  return build_band_region(prior, x, n, m, r, s, lambda, options);
}

bool band_contains_pointwise(const GammaPrior& prior, double x, int n, int m,
                             int r, int s, double lambda, int grid_size,
                             double y1, double y2) {
  const SignedParetoMixture mix = predictive_pair(prior, x, n, m, r, s);
  const double cred = std::sqrt(1.0 - lambda);
  const Interval a = solve_interval(marginal_y1(mix), mean_y1(mix), cred,
                                    SliceForm::two_sided);
  if (y1 < a.lo || y1 > a.hi) return false;
  const double h = (a.hi - a.lo) / static_cast<double>(grid_size - 1);
  int k = h > 0.0 ? static_cast<int>((y1 - a.lo) / h) : 0;
  k = std::clamp(k, 0, grid_size - 2);
  const auto slice = [&](int idx) {
    const double node = band_grid_node(a, grid_size, idx);
    return solve_interval(conditional_y2_given_y1(mix, node),
                          conditional_mean_y2(mix, node), cred,
                          SliceForm::two_sided);
  };
  const Interval s0 = slice(k), s1 = slice(k + 1);
  const double g0 = band_grid_node(a, grid_size, k);
  const double g1 = band_grid_node(a, grid_size, k + 1);
  const double t = g1 > g0 ? (y1 - g0) / (g1 - g0) : 0.0;
  const double lo = s0.lo + t * (s1.lo - s0.lo);
  const double hi = s0.hi + t * (s1.hi - s0.hi);
  return y2 >= lo && y2 <= hi;
}

double band_credibility(const GammaPrior& prior, double x, int n, int m,
                        int r, int s, const BandRegion& band) {
  const SignedParetoMixture mix = predictive_pair(prior, x, n, m, r, s);
  const ParetoMixture1D marg = marginal_y1(mix);
  // 5-point Gauss-Legendre per grid cell
  static const double nodes[5] = {-0.9061798459386640, -0.5384693101056831,
                                  0.0, 0.5384693101056831,
                                  0.9061798459386640};
  static const double wts[5] = {0.2369268850561891, 0.4786286704993665,
                                0.5688888888888889, 0.4786286704993665,
                                0.2369268850561891};
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < band.grid.size(); ++k) {
    const double a0 = band.grid[k], a1 = band.grid[k + 1];
    const double half = 0.5 * (a1 - a0), mid = 0.5 * (a0 + a1);
    double cell = 0.0;
    for (int q = 0; q < 5; ++q) {
      const double y1 = mid + half * nodes[q];
      const Interval b = band.slice_at(y1);
      const double inner =
          interval_mass(conditional_y2_given_y1(mix, y1), b.lo, b.hi);
      cell += wts[q] * marg.pdf(y1) * inner;
    }
    total += cell * half;
  }
  return total;
}

// ---------------------------------------------------------------------------
// affine back-map to order statistics

HalfSpaceRegion to_order_statistics(const HalfSpaceRegion& region,
                                    const CensoredSample& sample) {
  if (region.frame != Frame::spacings)
    throw std::invalid_argument(
        "to_order_statistics: region must be in spacing coordinates");
  HalfSpaceRegion out = region;
  out.frame = Frame::order_statistics;
  out.shift = sample.values.back();
  return out;
}

BandRegion to_order_statistics(const BandRegion& region,
                               const CensoredSample& sample) {
  if (region.frame != Frame::spacings)
    throw std::invalid_argument(
        "to_order_statistics: region must be in spacing coordinates");
  const double xm = sample.values.back();
  BandRegion out = region;
  out.frame = Frame::order_statistics;
  out.shift = xm;
  out.a = Interval{region.a.lo + xm, region.a.hi + xm};
  for (std::size_t k = 0; k < region.grid.size(); ++k) {
    const double t1 = region.grid[k] + xm;
    out.grid[k] = t1;
    out.slices[k] = Interval{t1 + region.slices[k].lo,
                             t1 + region.slices[k].hi};
  }
  return out;
}

// ---------------------------------------------------------------------------
// serialization

std::string to_json(const HalfSpaceRegion& region) {
  json j;
  j["type"] = "half_space";
  j["frame"] = frame_name(region.frame);
  j["lambda"] = region.lambda;
  j["coefficients"] = region.coefficients;
  j["bound"] = region.bound;
  j["scale"] = region.scale;
  j["shape"] = region.shape;
  j["shift"] = region.shift;
  return j.dump(2);
}

std::string to_json(const BandRegion& region) {
  json j;
  j["type"] = "band";
  j["frame"] = frame_name(region.frame);
  j["lambda"] = region.lambda;
  j["slice_credibility"] = region.slice_credibility;
  j["a"] = {region.a.lo, region.a.hi};
  j["shift"] = region.shift;
  json rows = json::array();
  for (std::size_t k = 0; k < region.grid.size(); ++k)
    rows.push_back({{"y1", region.grid[k]},
                    {"lo", region.slices[k].lo},
                    {"hi", region.slices[k].hi}});
  j["grid"] = rows;
  return j.dump(2);
}

HalfSpaceRegion half_space_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("type") != "half_space")
    throw std::invalid_argument("half_space_from_json: wrong region type");
  HalfSpaceRegion region;
  region.frame = frame_from_name(j.at("frame").get<std::string>());
  region.lambda = j.at("lambda").get<double>();
  region.coefficients = j.at("coefficients").get<std::vector<double>>();
  region.bound = j.at("bound").get<double>();
  region.scale = j.at("scale").get<double>();
  region.shape = j.at("shape").get<double>();
  region.shift = j.at("shift").get<double>();
  return region;
}

BandRegion band_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("type") != "band")
    throw std::invalid_argument("band_from_json: wrong region type");
  BandRegion region;
  region.frame = frame_from_name(j.at("frame").get<std::string>());
  region.lambda = j.at("lambda").get<double>();
  region.slice_credibility = j.at("slice_credibility").get<double>();
  region.a = Interval{j.at("a").at(0).get<double>(),
                      j.at("a").at(1).get<double>()};
  region.shift = j.at("shift").get<double>();
  for (const auto& row : j.at("grid")) {
    region.grid.push_back(row.at("y1").get<double>());
    region.slices.push_back(Interval{row.at("lo").get<double>(),
                                     row.at("hi").get<double>()});
  }
  return region;
}

}  // namespace censpred

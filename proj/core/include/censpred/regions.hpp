#ifndef CENSPRED_REGIONS_HPP
#define CENSPRED_REGIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "censpred/model.hpp"
#include "censpred/predictive.hpp"

namespace censpred {

enum class Frame { spacings, order_statistics };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Half-space prediction region over the next-N spacings,
///   { z >= 0 : sum c_i z_i <= bound },
/// or its affine image in order-statistic coordinates (shift = x_{m:n}).
/// Dividing both sides by `scale` (= x+beta) recovers the normalized form
/// with bound equal to the Beta type-II quantile.
struct HalfSpaceRegion {
  Frame frame = Frame::spacings;
  double lambda = 0.0;
  std::vector<double> coefficients;  // over spacings, all > 0
  double bound = 0.0;
  double scale = 1.0;   // x + beta
  double shape = 0.0;   // m + alpha
  double shift = 0.0;   // x_{m:n} in the order-statistic frame

  int dim() const { return static_cast<int>(coefficients.size()); }
  bool contains(std::span<const double> point) const;
};

/// The highest-density region of credibility 1-lambda for the next N
/// spacings: coefficients (n-m-i+1), bound c0*(x+beta) with c0 the
/// (1-lambda)-quantile of BetaTypeII(N, m+alpha).
HalfSpaceRegion hpd_region(const GammaPrior& prior, double x, int n, int m,
                           int N, double lambda);

/// Predictive mass of the half-space through the one-dimensional Beta
/// type-II reduction (exact up to quantile tolerance).
double hpd_credibility(const HalfSpaceRegion& region);

/// Interval slice pivots: symmetric about the (conditional) mean and clipped
/// at zero, or one-sided.
enum class SliceForm { two_sided, upper_only, lower_only };

struct BandOptions {
  int grid_size = 256;
  /// Per-step miss probabilities with (1-lambda1)(1-lambda2) = 1-lambda;
  /// negative means the equal split with credibility sqrt(1-lambda) each.
  double lambda1 = -1.0;
  double lambda2 = -1.0;
  SliceForm step1_form = SliceForm::two_sided;
  SliceForm step2_form = SliceForm::two_sided;
};

/// Band region { (y1,y2) : y1 in A, y2 in B(y1) } with B linearly
/// interpolated between grid nodes; total credibility is the product of the
/// two step credibilities.
struct BandRegion {
  Frame frame = Frame::spacings;
  double lambda = 0.0;
  Interval a;
  std::vector<double> grid;      // y1 nodes, ascending, size >= 2
  std::vector<Interval> slices;  // B at the nodes
  double slice_credibility = 0.0;
  double shift = 0.0;  // x_{m:n} in the order-statistic frame

  /// Linear interpolation of the slice bounds; requires y1 in [a.lo, a.hi].
  Interval slice_at(double y1) const;
  bool contains(double p1, double p2) const;
};

/// Step 1: interval A for Y1 of credibility sqrt(1-lambda) under the
/// marginal predictive, pivoted at the mean and clipped at 0. Requires
/// m + alpha > 1.
Interval step1_interval(const GammaPrior& prior, double x, int n, int m,
                        int r, int s, double lambda);

/// Step 2: interval B(y1) for Y2 of conditional credibility sqrt(1-lambda),
/// pivoted at the conditional mean and clipped at 0.
Interval step2_interval(const GammaPrior& prior, double x, int n, int m,
                        int r, int s, double lambda, double y1);

BandRegion build_band_region(const GammaPrior& prior, double x, int n, int m,
                             int r, int s, double lambda, int grid_size = 256);
BandRegion build_band_region(const GammaPrior& prior, double x, int n, int m,
                             int r, int s, double lambda,
                             const BandOptions& options);

/// Numerical total credibility of a band region (quadrature of the marginal
/// density against the interpolated conditional slice mass).
double band_credibility(const GammaPrior& prior, double x, int n, int m,
                        int r, int s, const BandRegion& band);

/// Affine map from spacing coordinates to order-statistic coordinates using
/// x_{m:n}; half-space regions keep their coefficients over the recovered
/// spacings, band regions get shifted/sheared grid rows.
HalfSpaceRegion to_order_statistics(const HalfSpaceRegion& region,
                                    const CensoredSample& sample);
BandRegion to_order_statistics(const BandRegion& region,
                               const CensoredSample& sample);

/// Uniform step-1 grid node k of grid_size nodes spanning `a` (endpoints
/// included); shared by the band builder and the lazy membership path.
double band_grid_node(const Interval& a, int grid_size, int k);

/// Membership of (y1, y2) in the band that build_band_region would produce,
/// evaluating only the two grid slices that bracket y1.
bool band_contains_pointwise(const GammaPrior& prior, double x, int n, int m,
                             int r, int s, double lambda, int grid_size,
                             double y1, double y2);

// JSON serialization (stable schema: frame tag, lambda, and either
// {coefficients, bound} or {a, grid rows}).
std::string to_json(const HalfSpaceRegion& region);
std::string to_json(const BandRegion& region);
HalfSpaceRegion half_space_from_json(const std::string& text);
BandRegion band_from_json(const std::string& text);

}  // namespace censpred

#endif  // CENSPRED_REGIONS_HPP

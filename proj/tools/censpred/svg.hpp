#ifndef CENSPRED_TOOLS_SVG_HPP
#define CENSPRED_TOOLS_SVG_HPP

#include <string>
#include <vector>

#include "censpred/regions.hpp"

namespace censpred::cli {

/// Fixed 600x600 viewport, linear axes with data-driven bounds.
/// Renders the N = 2 half-space region as a filled triangle.
std::string svg_half_space(const HalfSpaceRegion& region);

/// Renders a band region as a filled polygon between the slice bounds, with
/// the conditional-mean curve (values aligned with region.grid) dashed.
std::string svg_band(const BandRegion& region,
                     const std::vector<double>& mean_curve,
                     const std::string& x_label, const std::string& y_label);

}  // namespace censpred::cli

#endif  // CENSPRED_TOOLS_SVG_HPP

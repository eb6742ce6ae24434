#pragma once

#include <cstdint>
#include <vector>

#include "hire/geometry.hpp"

namespace hire {

/// Information gain sampled at bin_count evenly spaced yaw angles,
/// gains[b] for yaw 2*pi*b/bin_count. Values are exact unknown-voxel counts.
struct YawBins {
  int bin_count = 0;
  std::vector<std::int32_t> gains;

  bool empty() const { return bin_count == 0; }

  double yaw_of_bin(int b) const { return 2.0 * std::numbers::pi * b / bin_count; }

  std::int32_t max_gain() const {
    std::int32_t best = 0;
    for (const std::int32_t g : gains) best = std::max(best, g);
    return best;
  }

  /// Yaw of the highest bin; ties resolve to the smallest bin index.
  double best_yaw() const {
    int best = 0;
    for (int b = 1; b < bin_count; ++b)
      if (gains[b] > gains[best]) best = b;
    return yaw_of_bin(best);
  }
};

/// Circular linear interpolation between the two bins adjacent to yaw.
inline double gain_at(const YawBins& bins, double yaw) {
  const double span = 2.0 * std::numbers::pi;
  const double pos = wrap_angle_2pi(yaw) / span * bins.bin_count;
  const int lo = static_cast<int>(pos) % bins.bin_count;
  const int hi = (lo + 1) % bins.bin_count;
  const double frac = pos - static_cast<int>(pos);
  return (1.0 - frac) * bins.gains[lo] + frac * bins.gains[hi];
}

}  // namespace hire

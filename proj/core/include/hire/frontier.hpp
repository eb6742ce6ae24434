#pragma once

#include <span>
#include <string>
#include <vector>

#include "hire/rng.hpp"
#include "hire/voxel_map.hpp"

namespace hire {

/// Binary unknown-cell mask of one map slice (1 = Unknown).
struct SliceImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, index = iy * width + ix

  std::uint8_t pixel(int ix, int iy) const {
    return pixels[static_cast<std::size_t>(iy) * width + ix];
  }
};

struct Blob {
  double centroid_x = 0.0;  // pixel coordinates
  double centroid_y = 0.0;
  int area = 0;
  int first_pixel = 0;  // row-major index of the component's first pixel
};

/// A guidance circle over a blob of unknown cells at one slice height.
struct FrontierRegion {
  double center_x = 0.0;  // world coordinates (m)
  double center_y = 0.0;
  double radius = 0.0;
  double height = 0.0;
  double weight = 0.0;  // blob pixel area
};

struct FrontierSet {
  std::vector<FrontierRegion> regions;
  double total_weight = 0.0;
  Aabb grid_bounds{};  // x-y clamp bounds for sampled points

  bool empty() const { return regions.empty(); }
};

SliceImage slice_to_image(const MapSlice& slice);

/// 8-connected components of the mask with area >= min_area, sorted by
/// descending area, ties by the row-major position of the first pixel.
std::vector<Blob> detect_blobs(const SliceImage& img, int min_area);

/// Full detection pipeline over the given slice heights.
FrontierSet detect_frontiers(const OccupancyGrid& grid, std::span<const double> levels,
                             int min_area);

/// Draws a point from a region chosen with probability weight/total, uniform
/// in the region's disk, clamped to the grid x-y bounds. Throws
/// EmptyFrontierSetError when the set is empty.
Vec3 weighted_sample_in_frontiers(const FrontierSet& frontiers, Rng& rng);

/// Debug dumps in portable graymap format: the raw slice (free=white,
/// occupied=black, unknown=grey) and the blob labeling.
void write_slice_pgm(const MapSlice& slice, const std::string& path);
void write_blobs_pgm(const SliceImage& img, std::span<const Blob> blobs, const std::string& path);

}  // namespace hire

#include "hire/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

namespace hire {

SliceImage slice_to_image(const MapSlice& slice) {
  SliceImage img;
  img.width = slice.width;
  img.height = slice.depth;
  img.pixels.resize(slice.cells.size());
  for (std::size_t i = 0; i < slice.cells.size(); ++i)
    img.pixels[i] = slice.cells[i] == VoxelState::Unknown ? 1 : 0;
  return img;
}

std::vector<Blob> detect_blobs(const SliceImage& img, int min_area) {
  const int w = img.width, h = img.height;
  std::vector<std::uint8_t> seen(img.pixels.size(), 0);
  std::vector<Blob> blobs;
  std::vector<int> stack;

  for (int start = 0; start < w * h; ++start) {
    if (!img.pixels[start] || seen[start]) continue;
    // Flood one 8-connected component.
    Blob blob;
    blob.first_pixel = start;
    double sum_x = 0.0, sum_y = 0.0;
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      const int cx = cur % w, cy = cur / w;
      ++blob.area;
      sum_x += cx;
      sum_y += cy;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const int nx = cx + dx, ny = cy + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const int ni = ny * w + nx;
          if (img.pixels[ni] && !seen[ni]) {
            seen[ni] = 1;
            stack.push_back(ni);
          }
        }
    }
    if (blob.area >= min_area) {
      blob.centroid_x = sum_x / blob.area;
      blob.centroid_y = sum_y / blob.area;
      blobs.push_back(blob);
    }
  }

  std::sort(blobs.begin(), blobs.end(), [](const Blob& a, const Blob& b) {
    if (a.area != b.area) return a.area > b.area;
    return a.first_pixel < b.first_pixel;
  });
  return blobs;
}

FrontierSet detect_frontiers(const OccupancyGrid& grid, std::span<const double> levels,
                             int min_area) {
  FrontierSet set;
  set.grid_bounds = grid.bounds();
  const double res = grid.resolution();
  for (const double h : levels) {
    const MapSlice slice = slice_level(grid, h);
    const SliceImage img = slice_to_image(slice);
    for (const Blob& blob : detect_blobs(img, min_area)) {
      FrontierRegion region;
      region.center_x = grid.origin().x + (blob.centroid_x + 0.5) * res;
      region.center_y = grid.origin().y + (blob.centroid_y + 0.5) * res;
      region.radius = res * std::sqrt(blob.area / std::numbers::pi);
      region.height = h;
      region.weight = blob.area;
      // A circle centered inside the grid always intersects it; the discard
      // below is the contract for degenerate inputs.
      const bool outside = region.center_x + region.radius < set.grid_bounds.min.x ||
                           region.center_x - region.radius > set.grid_bounds.max.x ||
                           region.center_y + region.radius < set.grid_bounds.min.y ||
                           region.center_y - region.radius > set.grid_bounds.max.y;
      if (outside) continue;
      set.total_weight += region.weight;
      set.regions.push_back(region);
    }
  }
  return set;
}

Vec3 weighted_sample_in_frontiers(const FrontierSet& frontiers, Rng& rng) {
  if (frontiers.empty()) throw EmptyFrontierSetError();
  std::vector<double> weights;
  weights.reserve(frontiers.regions.size());
  for (const FrontierRegion& r : frontiers.regions) weights.push_back(r.weight);
  const std::size_t pick = rng.pick_weighted(weights, frontiers.total_weight);
  const FrontierRegion& region = frontiers.regions[pick];

  const double r = region.radius * std::sqrt(rng.uniform01());
  const double theta = 2.0 * std::numbers::pi * rng.uniform01();
  double x = region.center_x + r * std::cos(theta);
  double y = region.center_y + r * std::sin(theta);
  x = std::clamp(x, frontiers.grid_bounds.min.x, frontiers.grid_bounds.max.x);
  y = std::clamp(y, frontiers.grid_bounds.min.y, frontiers.grid_bounds.max.y);
  return {x, y, region.height};
}

namespace {

void write_pgm(const std::vector<std::uint8_t>& gray, int w, int h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  out << "P5\n" << w << " " << h << "\n255\n";
  out.write(reinterpret_cast<const char*>(gray.data()), static_cast<std::streamsize>(gray.size()));
}

}  // namespace

void write_slice_pgm(const MapSlice& slice, const std::string& path) {
  std::vector<std::uint8_t> gray(slice.cells.size());
  for (std::size_t i = 0; i < slice.cells.size(); ++i) {
    switch (slice.cells[i]) {
      case VoxelState::Free: gray[i] = 255; break;
      case VoxelState::Occupied: gray[i] = 0; break;
      default: gray[i] = 128; break;
    }
  }
  write_pgm(gray, slice.width, slice.depth, path);
}

void write_blobs_pgm(const SliceImage& img, std::span<const Blob> blobs,
                     const std::string& path) {
  std::vector<std::uint8_t> gray(img.pixels.size(), 255);
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    if (img.pixels[i]) gray[i] = 230;  // unknown but below min_area
  // Re-label components so each kept blob gets its own tone; membership is
  // recovered by flooding from the stored first pixel.
  std::vector<std::uint8_t> seen(img.pixels.size(), 0);
  std::vector<int> stack;
  for (std::size_t b = 0; b < blobs.size(); ++b) {
    const std::uint8_t tone = static_cast<std::uint8_t>(40 + (b * 37) % 160);
    stack.assign(1, blobs[b].first_pixel);
    seen[blobs[b].first_pixel] = 1;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      gray[cur] = tone;
      const int cx = cur % img.width, cy = cur / img.width;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = cx + dx, ny = cy + dy;
          if (nx < 0 || ny < 0 || nx >= img.width || ny >= img.height) continue;
          const int ni = ny * img.width + nx;
          if (img.pixels[ni] && !seen[ni]) {
            seen[ni] = 1;
            stack.push_back(ni);
          }
        }
    }
  }
  write_pgm(gray, img.width, img.height, path);
}

}  // namespace hire

#include "hire/voxel_map.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace hire {

namespace {
constexpr double kBoundaryEps = 1e-9;
}

OccupancyGrid::OccupancyGrid(const Vec3& origin, double resolution, const Vec3i& dims,
                             VoxelState fill)
    : origin_(origin), resolution_(resolution), dims_(dims) {
  if (resolution <= 0.0) throw std::invalid_argument("grid resolution must be > 0");
  if (dims.x <= 0 || dims.y <= 0 || dims.z <= 0)
    throw std::invalid_argument("grid dims must be positive");
  states_.assign(static_cast<std::size_t>(dims.x) * dims.y * dims.z, fill);
  block_dims_ = {(dims.x + kBlockSize - 1) >> kBlockShift,
                 (dims.y + kBlockSize - 1) >> kBlockShift,
                 (dims.z + kBlockSize - 1) >> kBlockShift};
  const std::size_t nblocks =
      static_cast<std::size_t>(block_dims_.x) * block_dims_.y * block_dims_.z;
  block_generation_.assign(nblocks, 1);
  block_occupied_.assign(nblocks, 0);
  if (fill == VoxelState::Occupied) {
    for (int z = 0; z < dims_.z; ++z)
      for (int y = 0; y < dims_.y; ++y)
        for (int x = 0; x < dims_.x; ++x) ++block_occupied_[block_of({x, y, z})];
  }
}

Vec3i OccupancyGrid::world_to_voxel(const Vec3& p) const {
  if (!contains(p)) throw OutOfBoundsError("point outside grid");
  return world_to_voxel_unchecked(p);
}

bool OccupancyGrid::changed_since(const Vec3i& lo, const Vec3i& hi, std::uint64_t since) const {
  const int bx0 = std::max(lo.x, 0) >> kBlockShift, bx1 = std::min(hi.x, dims_.x - 1) >> kBlockShift;
  const int by0 = std::max(lo.y, 0) >> kBlockShift, by1 = std::min(hi.y, dims_.y - 1) >> kBlockShift;
  const int bz0 = std::max(lo.z, 0) >> kBlockShift, bz1 = std::min(hi.z, dims_.z - 1) >> kBlockShift;
  for (int bz = bz0; bz <= bz1; ++bz)
    for (int by = by0; by <= by1; ++by) {
      const std::size_t base = static_cast<std::size_t>(block_dims_.x) *
                               (static_cast<std::size_t>(by) +
                                static_cast<std::size_t>(block_dims_.y) * bz);
      for (int bx = bx0; bx <= bx1; ++bx)
        if (block_generation_[base + bx] > since) return true;
    }
  return false;
}

bool OccupancyGrid::any_occupied_in(const Vec3i& lo, const Vec3i& hi) const {
  const int bx0 = std::max(lo.x, 0) >> kBlockShift, bx1 = std::min(hi.x, dims_.x - 1) >> kBlockShift;
  const int by0 = std::max(lo.y, 0) >> kBlockShift, by1 = std::min(hi.y, dims_.y - 1) >> kBlockShift;
  const int bz0 = std::max(lo.z, 0) >> kBlockShift, bz1 = std::min(hi.z, dims_.z - 1) >> kBlockShift;
  for (int bz = bz0; bz <= bz1; ++bz)
    for (int by = by0; by <= by1; ++by) {
      const std::size_t base = static_cast<std::size_t>(block_dims_.x) *
                               (static_cast<std::size_t>(by) +
                                static_cast<std::size_t>(block_dims_.y) * bz);
      for (int bx = bx0; bx <= bx1; ++bx)
        if (block_occupied_[base + bx] > 0) return true;
    }
  return false;
}

void integrate_scan(OccupancyGrid& grid, const Vec3& sensor_origin,
                    std::span<const DepthRay> rays, double max_range) {
  // Two phases: gather all writes first, apply Free then Occupied, so a voxel
  // hit by one ray and grazed by another always ends up Occupied.
  std::vector<Vec3i> occupied_hits;
  occupied_hits.reserve(rays.size());

  for (const DepthRay& ray : rays) {
    const bool has_hit = ray.hit_distance.has_value();
    const double t_hit = has_hit ? *ray.hit_distance : max_range;
    const double t_stop = std::min(t_hit, max_range);
    walk_ray(grid, sensor_origin, ray.direction, t_stop + 2.0 * kBoundaryEps,
             [&](const Vec3i& idx, double /*t_enter*/, double t_exit) {
               if (has_hit && t_exit > t_hit + kBoundaryEps) {
                 // This voxel's span contains the measured depth: the hit voxel.
                 occupied_hits.push_back(idx);
                 return false;
               }
               if (t_exit > t_stop + kBoundaryEps) return false;  // partially out of range
               grid.set_unchecked(idx, VoxelState::Free);
               return true;
             });
  }
  for (const Vec3i& idx : occupied_hits) grid.set_unchecked(idx, VoxelState::Occupied);
}

namespace {

/// Inclusive voxel index range overlapped by a world-space box, shrunk by a
/// hair so that zero-measure face contact does not count as overlap.
inline bool overlap_range(const OccupancyGrid& grid, const Vec3& lo, const Vec3& hi, Vec3i& ilo,
                          Vec3i& ihi) {
  const Vec3 lo_n = lo + Vec3(kBoundaryEps, kBoundaryEps, kBoundaryEps);
  const Vec3 hi_n = hi - Vec3(kBoundaryEps, kBoundaryEps, kBoundaryEps);
  if (!grid.contains(lo_n) || !grid.contains(hi_n)) return false;
  ilo = grid.world_to_voxel_unchecked(lo_n);
  ihi = grid.world_to_voxel_unchecked(hi_n);
  return true;
}

}  // namespace

bool is_node_free(const OccupancyGrid& grid, const Vec3& p, const CollisionBox& box) {
  Vec3i lo, hi;
  if (!overlap_range(grid, p - box.half_extents, p + box.half_extents, lo, hi)) return false;
  for (int z = lo.z; z <= hi.z; ++z)
    for (int y = lo.y; y <= hi.y; ++y) {
      std::size_t li = grid.linear({lo.x, y, z});
      for (int x = lo.x; x <= hi.x; ++x, ++li)
        if (grid.at_linear(li) != VoxelState::Free) return false;
    }
  return true;
}

bool is_edge_free(const OccupancyGrid& grid, const Vec3& p1, const Vec3& p2,
                  const CollisionBox& box) {
  // Canonical endpoint order makes the sample set identical for both
  // directions, so symmetry holds bit-for-bit.
  const Vec3* a = &p1;
  const Vec3* b = &p2;
  if (std::tie(p2.x, p2.y, p2.z) < std::tie(p1.x, p1.y, p1.z)) std::swap(a, b);
  const double len = distance(*a, *b);
  const int n = std::max(1, static_cast<int>(std::ceil(len / (grid.resolution() * 0.5))));
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    if (!is_node_free(grid, *a + (*b - *a) * t, box)) return false;
  }
  return true;
}

MapSlice slice_level(const OccupancyGrid& grid, double h) {
  const double rel = (h - grid.origin().z) / grid.resolution();
  const int layer = static_cast<int>(std::floor(rel));
  if (layer < 0 || layer >= grid.dims().z) throw OutOfBoundsError("slice height outside grid");
  MapSlice slice;
  slice.height = h;
  slice.width = grid.dims().x;
  slice.depth = grid.dims().y;
  slice.resolution = grid.resolution();
  slice.cells.resize(static_cast<std::size_t>(slice.width) * slice.depth);
  for (int y = 0; y < slice.depth; ++y) {
    const std::size_t src = grid.linear({0, y, layer});
    for (int x = 0; x < slice.width; ++x)
      slice.cells[static_cast<std::size_t>(y) * slice.width + x] = grid.at_linear(src + x);
  }
  return slice;
}

namespace {

/// Per-voxel "collision box centered here fits in free space", computed with
/// three separable sliding-window passes over the free mask.
std::vector<std::uint8_t> box_free_field(const OccupancyGrid& grid, const CollisionBox& box) {
  const Vec3i d = grid.dims();
  const std::size_t n = grid.voxel_count();
  std::vector<std::uint8_t> cur(n), next(n);
  for (std::size_t i = 0; i < n; ++i)
    cur[i] = grid.at_linear(i) == VoxelState::Free ? 1 : 0;

  // Window half-widths per axis, matching is_node_free's overlap rule for a
  // box centered on a voxel center.
  const double res = grid.resolution();
  int hw[3];
  for (int a = 0; a < 3; ++a) {
    const double he = box.half_extents[a];
    hw[a] = static_cast<int>(std::floor(0.5 + he / res - kBoundaryEps));
  }

  const int dim_a[3] = {d.x, d.y, d.z};
  const std::size_t stride_a[3] = {1, static_cast<std::size_t>(d.x),
                                   static_cast<std::size_t>(d.x) * d.y};
  for (int axis = 0; axis < 3; ++axis) {
    const int w = hw[axis];
    const int len = dim_a[axis];
    const std::size_t stride = stride_a[axis];
    const int u_dim = dim_a[(axis + 1) % 3];
    const int v_dim = dim_a[(axis + 2) % 3];
    const std::size_t u_stride = stride_a[(axis + 1) % 3];
    const std::size_t v_stride = stride_a[(axis + 2) % 3];
    for (int v = 0; v < v_dim; ++v)
      for (int u = 0; u < u_dim; ++u) {
        const std::size_t base = u * u_stride + v * v_stride;
        int window = 0;
        for (int i = 0; i < std::min(w, len); ++i) window += cur[base + i * stride];
        for (int i = 0; i < len; ++i) {
          const int add = i + w;
          if (add < len) window += cur[base + add * stride];
          const int good = (i - w >= 0 && i + w < len && window == 2 * w + 1) ? 1 : 0;
          next[base + i * stride] = static_cast<std::uint8_t>(good);
          const int drop = i - w;
          if (drop >= 0) window -= cur[base + drop * stride];
        }
      }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

ReachableSet compute_reachable(const OccupancyGrid& ground_truth, const Vec3& start,
                               const CollisionBox& box) {
  ReachableSet result;
  result.mask.assign(ground_truth.voxel_count(), 0);
  if (!ground_truth.contains(start)) return result;

  const std::vector<std::uint8_t> box_free = box_free_field(ground_truth, box);
  const Vec3i start_idx = ground_truth.world_to_voxel_unchecked(start);
  if (!box_free[ground_truth.linear(start_idx)]) return result;

  const Vec3i d = ground_truth.dims();
  std::deque<Vec3i> queue{start_idx};
  result.mask[ground_truth.linear(start_idx)] = 1;
  static constexpr int kNb[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                    {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  while (!queue.empty()) {
    const Vec3i cur = queue.front();
    queue.pop_front();
    for (const auto& nb : kNb) {
      const Vec3i nxt{cur.x + nb[0], cur.y + nb[1], cur.z + nb[2]};
      if (nxt.x < 0 || nxt.y < 0 || nxt.z < 0 || nxt.x >= d.x || nxt.y >= d.y || nxt.z >= d.z)
        continue;
      const std::size_t li = ground_truth.linear(nxt);
      if (result.mask[li] || !box_free[li]) continue;
      result.mask[li] = 1;
      queue.push_back(nxt);
    }
  }

  // Occupied voxels face-adjacent to the reachable free region are the
  // observable surfaces; include them in the denominator.
  std::vector<std::uint8_t> adjacent(ground_truth.voxel_count(), 0);
  for (int z = 0; z < d.z; ++z)
    for (int y = 0; y < d.y; ++y)
      for (int x = 0; x < d.x; ++x) {
        const std::size_t li = ground_truth.linear({x, y, z});
        if (!result.mask[li]) continue;
        for (const auto& nb : kNb) {
          const Vec3i nxt{x + nb[0], y + nb[1], z + nb[2]};
          if (nxt.x < 0 || nxt.y < 0 || nxt.z < 0 || nxt.x >= d.x || nxt.y >= d.y ||
              nxt.z >= d.z)
            continue;
          const std::size_t ln = ground_truth.linear(nxt);
          if (ground_truth.at_linear(ln) == VoxelState::Occupied) adjacent[ln] = 1;
        }
      }
  for (std::size_t i = 0; i < adjacent.size(); ++i)
    if (adjacent[i]) result.mask[i] = 1;

  result.count = 0;
  for (const std::uint8_t m : result.mask) result.count += m;
  return result;
}

double exploration_ratio(const OccupancyGrid& belief, const ReachableSet& reachable) {
  if (belief.voxel_count() != reachable.mask.size())
    throw GeometryMismatchError("belief grid does not match reachable set");
  if (reachable.count == 0) return 1.0;
  std::size_t known = 0;
  for (std::size_t i = 0; i < reachable.mask.size(); ++i)
    if (reachable.mask[i] && belief.at_linear(i) != VoxelState::Unknown) ++known;
  return static_cast<double>(known) / static_cast<double>(reachable.count);
}

double exploration_ratio(const OccupancyGrid& belief, const OccupancyGrid& ground_truth,
                         const Vec3& start, const CollisionBox& box) {
  if (!belief.same_geometry(ground_truth))
    throw GeometryMismatchError("belief and ground truth grids differ in geometry");
  return exploration_ratio(belief, compute_reachable(ground_truth, start, box));
}

}  // namespace hire

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hire/errors.hpp"
#include "hire/geometry.hpp"

namespace hire {

enum class VoxelState : std::uint8_t { Unknown = 0, Free = 1, Occupied = 2 };

/// Robot bounding volume as half-extents, all > 0.
struct CollisionBox {
  Vec3 half_extents{0.25, 0.25, 0.15};
};

/// Dense tri-state voxel grid. Every voxel starts Unknown. Besides the raw
/// state array the grid keeps per-block (8^3 voxels) summaries: an occupied
/// count used to skip occlusion ray casts through empty regions, and a write
/// generation used to detect which regions changed between planning
/// iterations.
class OccupancyGrid {
 public:
  static constexpr int kBlockShift = 3;
  static constexpr int kBlockSize = 1 << kBlockShift;

  OccupancyGrid(const Vec3& origin, double resolution, const Vec3i& dims,
                VoxelState fill = VoxelState::Unknown);

  const Vec3& origin() const { return origin_; }
  double resolution() const { return resolution_; }
  const Vec3i& dims() const { return dims_; }
  Vec3 max_corner() const {
    return origin_ + Vec3(dims_.x, dims_.y, dims_.z) * resolution_;
  }
  Aabb bounds() const { return {origin_, max_corner()}; }
  std::size_t voxel_count() const { return states_.size(); }

  bool same_geometry(const OccupancyGrid& o) const {
    return origin_ == o.origin_ && resolution_ == o.resolution_ && dims_ == o.dims_;
  }

  bool contains(const Vec3& p) const {
    const Vec3 hi = max_corner();
    return p.x >= origin_.x && p.y >= origin_.y && p.z >= origin_.z && p.x < hi.x &&
           p.y < hi.y && p.z < hi.z;
  }

  bool in_bounds(const Vec3i& i) const {
    return i.x >= 0 && i.y >= 0 && i.z >= 0 && i.x < dims_.x && i.y < dims_.y && i.z < dims_.z;
  }

  /// Voxel index of a point; throws OutOfBoundsError outside the grid.
  Vec3i world_to_voxel(const Vec3& p) const;

  /// Same mapping without the bounds contract; may return out-of-range indices.
  Vec3i world_to_voxel_unchecked(const Vec3& p) const {
    return {static_cast<int>(std::floor((p.x - origin_.x) / resolution_)),
            static_cast<int>(std::floor((p.y - origin_.y) / resolution_)),
            static_cast<int>(std::floor((p.z - origin_.z) / resolution_))};
  }

  Vec3 voxel_center(const Vec3i& i) const {
    return {origin_.x + (i.x + 0.5) * resolution_, origin_.y + (i.y + 0.5) * resolution_,
            origin_.z + (i.z + 0.5) * resolution_};
  }

  std::size_t linear(const Vec3i& i) const {
    return static_cast<std::size_t>(i.x) +
           static_cast<std::size_t>(dims_.x) *
               (static_cast<std::size_t>(i.y) + static_cast<std::size_t>(dims_.y) * i.z);
  }

  VoxelState at(const Vec3i& i) const {
    if (!in_bounds(i)) throw OutOfBoundsError("voxel index out of bounds");
    return states_[linear(i)];
  }
  VoxelState at_unchecked(const Vec3i& i) const { return states_[linear(i)]; }
  VoxelState at_linear(std::size_t i) const { return states_[i]; }

  void set(const Vec3i& i, VoxelState s) {
    if (!in_bounds(i)) throw OutOfBoundsError("voxel index out of bounds");
    set_unchecked(i, s);
  }

  void set_unchecked(const Vec3i& i, VoxelState s) {
    const std::size_t li = linear(i);
    const VoxelState old = states_[li];
    if (old == s) return;
    states_[li] = s;
    const std::size_t b = block_of(i);
    if (old == VoxelState::Occupied) --block_occupied_[b];
    if (s == VoxelState::Occupied) ++block_occupied_[b];
    block_generation_[b] = generation_;
  }

  std::span<const VoxelState> states() const { return states_; }

  // --- change tracking -----------------------------------------------------

  /// Starts a new mutation batch; subsequent writes are stamped with the new
  /// generation. Called by the simulator once per control step.
  void bump_generation() { ++generation_; }
  std::uint64_t generation() const { return generation_; }

  /// True if any voxel in the inclusive index box changed after `since`.
  bool changed_since(const Vec3i& lo, const Vec3i& hi, std::uint64_t since) const;

  /// True if any voxel in the inclusive index box is Occupied.
  bool any_occupied_in(const Vec3i& lo, const Vec3i& hi) const;

  const Vec3i& block_dims() const { return block_dims_; }
  std::size_t block_of(const Vec3i& i) const {
    return static_cast<std::size_t>(i.x >> kBlockShift) +
           static_cast<std::size_t>(block_dims_.x) *
               (static_cast<std::size_t>(i.y >> kBlockShift) +
                static_cast<std::size_t>(block_dims_.y) * (i.z >> kBlockShift));
  }
  std::uint64_t block_generation(std::size_t b) const { return block_generation_[b]; }
  std::size_t block_count() const { return block_generation_.size(); }

 private:
  Vec3 origin_;
  double resolution_;
  Vec3i dims_;
  Vec3i block_dims_;
  std::vector<VoxelState> states_;
  std::vector<std::uint16_t> block_occupied_;
  std::vector<std::uint64_t> block_generation_;
  std::uint64_t generation_ = 1;
};

/// One z-layer of the grid at height h.
struct MapSlice {
  double height = 0.0;
  int width = 0;   // x cells
  int depth = 0;   // y cells
  double resolution = 0.0;
  std::vector<VoxelState> cells;  // row-major, index = y * width + x

  VoxelState cell(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * width + ix]; }
};

/// A single depth ray: unit direction plus the measured hit distance, or
/// nullopt when nothing was hit within sensor range.
struct DepthRay {
  Vec3 direction;
  std::optional<double> hit_distance;
};

/// Walks the grid voxels pierced by o + t*d for t in [0, t_limit], clipped to
/// the grid, in near-to-far order (Amanatides & Woo stepping). The visitor is
/// called as visit(index, t_enter, t_exit) and walking stops when it returns
/// false.
template <class Visitor>
void walk_ray(const OccupancyGrid& grid, const Vec3& origin, const Vec3& dir, double t_limit,
              Visitor&& visit) {
  double t0, t1;
  if (!ray_aabb(origin, dir, grid.bounds(), t0, t1)) return;
  t1 = std::min(t1, t_limit);
  if (t1 < t0) return;

  const double res = grid.resolution();
  const Vec3 entry = origin + dir * t0;
  Vec3i idx = grid.world_to_voxel_unchecked(entry);
  // Clamp: the entry point can land exactly on the far boundary.
  idx.x = std::clamp(idx.x, 0, grid.dims().x - 1);
  idx.y = std::clamp(idx.y, 0, grid.dims().y - 1);
  idx.z = std::clamp(idx.z, 0, grid.dims().z - 1);

  int step[3];
  double t_next[3], t_delta[3];
  const double dir_a[3] = {dir.x, dir.y, dir.z};
  const double org_a[3] = {origin.x, origin.y, origin.z};
  const double grid_min[3] = {grid.origin().x, grid.origin().y, grid.origin().z};
  int idx_a[3] = {idx.x, idx.y, idx.z};
  for (int a = 0; a < 3; ++a) {
    if (dir_a[a] > 0.0) {
      step[a] = 1;
      t_delta[a] = res / dir_a[a];
      t_next[a] = (grid_min[a] + (idx_a[a] + 1) * res - org_a[a]) / dir_a[a];
    } else if (dir_a[a] < 0.0) {
      step[a] = -1;
      t_delta[a] = -res / dir_a[a];
      t_next[a] = (grid_min[a] + idx_a[a] * res - org_a[a]) / dir_a[a];
    } else {
      step[a] = 0;
      t_delta[a] = std::numeric_limits<double>::infinity();
      t_next[a] = std::numeric_limits<double>::infinity();
    }
  }

  double t_enter = t0;
  const int dims[3] = {grid.dims().x, grid.dims().y, grid.dims().z};
  while (true) {
    int axis = 0;
    if (t_next[1] < t_next[axis]) axis = 1;
    if (t_next[2] < t_next[axis]) axis = 2;
    const double t_exit = std::min(t_next[axis], t1);
    if (!visit(Vec3i{idx_a[0], idx_a[1], idx_a[2]}, t_enter, t_exit)) return;
    if (t_next[axis] >= t1) return;
    t_enter = t_next[axis];
    idx_a[axis] += step[axis];
    if (idx_a[axis] < 0 || idx_a[axis] >= dims[axis]) return;
    t_next[axis] += t_delta[axis];
  }
}

/// Integrates one depth scan. Voxels fully traversed before a hit (or up to
/// max_range on a miss) become Free, hit voxels become Occupied. Occupied
/// wins over Free within a single scan, which makes the result independent of
/// ray order and idempotent under re-integration.
void integrate_scan(OccupancyGrid& grid, const Vec3& sensor_origin,
                    std::span<const DepthRay> rays, double max_range);

/// True iff every voxel overlapped by the box centered at p is Free. Unknown
/// counts as not free; a box leaving the grid is not free.
bool is_node_free(const OccupancyGrid& grid, const Vec3& p, const CollisionBox& box);

/// True iff is_node_free holds at samples spaced <= resolution/2 along the
/// segment, endpoints included. Symmetric in its endpoints by construction.
bool is_edge_free(const OccupancyGrid& grid, const Vec3& p1, const Vec3& p2,
                  const CollisionBox& box);

/// Copies the z-layer containing height h; throws OutOfBoundsError outside
/// the grid's z extent.
MapSlice slice_level(const OccupancyGrid& grid, double h);

/// Ground-truth-reachable voxel set: flood fill from the start position over
/// free voxels where the collision box fits, plus occupied voxels face-
/// adjacent to that free region.
struct ReachableSet {
  std::vector<std::uint8_t> mask;  // 1 = reachable, indexed like the grid
  std::size_t count = 0;
};

ReachableSet compute_reachable(const OccupancyGrid& ground_truth, const Vec3& start,
                               const CollisionBox& box);

/// Fraction of reachable ground-truth voxels whose belief state is known.
/// Returns 1.0 when the reachable set is empty.
double exploration_ratio(const OccupancyGrid& belief, const OccupancyGrid& ground_truth,
                         const Vec3& start, const CollisionBox& box);

/// exploration_ratio against a precomputed reachable set.
double exploration_ratio(const OccupancyGrid& belief, const ReachableSet& reachable);

}  // namespace hire

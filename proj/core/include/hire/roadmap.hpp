#pragma once

#include <vector>

#include "hire/frontier.hpp"
#include "hire/kd_tree.hpp"
#include "hire/rng.hpp"
#include "hire/voxel_map.hpp"
#include "hire/yaw_bins.hpp"

namespace hire {

enum class NodeOrigin : std::uint8_t { Seed, Heuristic, Local, Global };

struct RoadmapEdge {
  NodeId to = 0;
  double length = 0.0;
};

struct RoadmapNode {
  NodeId id = 0;
  Vec3 position;
  std::vector<RoadmapEdge> neighbors;
  YawBins gains;
  bool dirty = true;  // gain needs (re-)evaluation
  NodeOrigin origin = NodeOrigin::Seed;

  // Gain bookkeeping, managed by the information gain module.
  std::uint32_t gain_version = 0;    // bumped on every re-evaluation
  std::uint64_t eval_generation = 0;  // grid generation the gains were computed at
  double best_gain_yaw = 0.0;
};

/// Sampling parameters for the incremental construction stages.
struct SamplerConfig {
  int heuristic_budget = 50;  // N_max: heuristic-stage failure budget
  double delta = 1.6;         // extension distance toward the frontier (m)
  double d_min = 0.8;         // spacing band (m)
  double d_max = 1.6;
  int k = 3;                        // frontier neighborhood size
  Vec3 local_region_half{5.0, 5.0, 1.5};  // local sampling box around the robot
  double connect_radius = 2.0;
  int local_budget = 50;
  int global_budget = 50;
};

/// Undirected spatially-indexed graph of collision-free nodes. Node ids are
/// never reused; pruned slots stay tombstoned.
class Roadmap {
 public:
  bool empty() const { return live_ == 0; }
  std::size_t size() const { return live_; }
  std::size_t total_created() const { return nodes_.size(); }

  bool alive(NodeId id) const { return id < nodes_.size() && nodes_[id].alive_; }

  const RoadmapNode& node(NodeId id) const;
  RoadmapNode& node_mut(NodeId id);

  /// Live node ids in ascending order.
  std::vector<NodeId> live_ids() const;

  NodeId nearest(const Vec3& p) const;  // throws EmptyRoadmapError
  std::vector<NodeId> k_nearest(const Vec3& p, std::size_t k) const;
  std::vector<NodeId> radius_search(const Vec3& p, double radius) const;

  /// Inserts p iff the node is collision-free and its distance to the current
  /// nearest node lies in [d_min, d_max] (no spacing constraint on the first
  /// node). Returns the new id, or nullopt on rejection.
  std::optional<NodeId> try_insert(const OccupancyGrid& grid, const Vec3& p,
                                   const SamplerConfig& cfg, const CollisionBox& box,
                                   NodeOrigin origin);

  bool has_edge(NodeId a, NodeId b) const;
  void add_edge(NodeId a, NodeId b, double length);
  void remove_edge(NodeId a, NodeId b);
  void remove_node(NodeId id);  // detaches all edges, tombstones, updates index

  std::size_t edge_count() const;  // undirected edges

 private:
  struct Slot : RoadmapNode {
    bool alive_ = false;
  };
  std::vector<Slot> nodes_;
  KdTree3 index_;
  std::size_t live_ = 0;
};

/// Candidate position one step of length delta from n_i toward n_f (or n_f
/// itself when closer than delta). Throws DegenerateDirectionError if the
/// points coincide.
Vec3 extend_node_to_frontier(const Vec3& n_i, const Vec3& n_f, double delta);

struct StageStats {
  int accepted = 0;
  int rejected = 0;
};

/// Alg.-style heuristic stage: sample a frontier point, extend its k nearest
/// roadmap nodes toward it, and insert the candidates that pass the validity
/// check. Every rejection counts toward the failure budget.
StageStats heuristic_sampling_stage(Roadmap& roadmap, const FrontierSet& frontiers,
                                    const OccupancyGrid& grid, const SamplerConfig& cfg,
                                    const CollisionBox& box, Rng& rng);

/// Uniform sampling in the local box around the robot, clipped to the grid.
StageStats local_region_sampling(Roadmap& roadmap, const OccupancyGrid& grid, const Vec3& robot,
                                 const SamplerConfig& cfg, const CollisionBox& box, Rng& rng);

/// Uniform sampling over the whole grid.
StageStats global_region_sampling(Roadmap& roadmap, const OccupancyGrid& grid,
                                  const SamplerConfig& cfg, const CollisionBox& box, Rng& rng);

/// Adds the collision-free edge for every unconnected node pair within
/// connect_radius. Existing edges are left untouched.
int connect_nodes(Roadmap& roadmap, const OccupancyGrid& grid, const SamplerConfig& cfg,
                  const CollisionBox& box);

struct PruneResult {
  std::vector<NodeId> removed_nodes;
  std::vector<std::pair<NodeId, NodeId>> removed_edges;  // normalized (a < b), includes
                                                         // edges dropped with their nodes
};

/// Removes every node failing is_node_free and every edge failing
/// is_edge_free against the current grid. Neighbors of removed nodes are
/// marked dirty.
PruneResult prune_invalid(Roadmap& roadmap, const OccupancyGrid& grid, const CollisionBox& box);

}  // namespace hire

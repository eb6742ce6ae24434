#include "hire/roadmap.hpp"

#include <algorithm>

#include "hire/errors.hpp"

namespace hire {

const RoadmapNode& Roadmap::node(NodeId id) const {
  if (!alive(id)) throw UnknownNodeError("node " + std::to_string(id) + " not in roadmap");
  return nodes_[id];
}

RoadmapNode& Roadmap::node_mut(NodeId id) {
  if (!alive(id)) throw UnknownNodeError("node " + std::to_string(id) + " not in roadmap");
  return nodes_[id];
}

std::vector<NodeId> Roadmap::live_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(live_);
  for (NodeId id = 0; id < nodes_.size(); ++id)
    if (nodes_[id].alive_) ids.push_back(id);
  return ids;
}

NodeId Roadmap::nearest(const Vec3& p) const {
  const auto id = index_.nearest(p);
  if (!id) throw EmptyRoadmapError();
  return *id;
}

std::vector<NodeId> Roadmap::k_nearest(const Vec3& p, std::size_t k) const {
  if (empty()) throw EmptyRoadmapError();
  return index_.k_nearest(p, k);
}

std::vector<NodeId> Roadmap::radius_search(const Vec3& p, double radius) const {
  return index_.radius_search(p, radius);
}

std::optional<NodeId> Roadmap::try_insert(const OccupancyGrid& grid, const Vec3& p,
                                          const SamplerConfig& cfg, const CollisionBox& box,
                                          NodeOrigin origin) {
  if (!is_node_free(grid, p, box)) return std::nullopt;
  if (!empty()) {
    const NodeId nn = nearest(p);
    const double d = distance(p, nodes_[nn].position);
    if (d < cfg.d_min || d > cfg.d_max) return std::nullopt;
  }
  const NodeId id = static_cast<NodeId>(nodes_.size());
  Slot slot;
  slot.id = id;
  slot.position = p;
  slot.dirty = true;
  slot.origin = origin;
  slot.alive_ = true;
  nodes_.push_back(std::move(slot));
  index_.insert(id, p);
  ++live_;
  return id;
}

bool Roadmap::has_edge(NodeId a, NodeId b) const {
  if (!alive(a)) return false;
  for (const RoadmapEdge& e : nodes_[a].neighbors)
    if (e.to == b) return true;
  return false;
}

void Roadmap::add_edge(NodeId a, NodeId b, double length) {
  nodes_[a].neighbors.push_back({b, length});
  nodes_[b].neighbors.push_back({a, length});
}

void Roadmap::remove_edge(NodeId a, NodeId b) {
  auto drop = [](std::vector<RoadmapEdge>& edges, NodeId to) {
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [to](const RoadmapEdge& e) { return e.to == to; }),
                edges.end());
  };
  drop(nodes_[a].neighbors, b);
  drop(nodes_[b].neighbors, a);
}

void Roadmap::remove_node(NodeId id) {
  Slot& slot = nodes_[id];
  for (const RoadmapEdge& e : slot.neighbors) {
    auto& peer = nodes_[e.to].neighbors;
    peer.erase(std::remove_if(peer.begin(), peer.end(),
                              [id](const RoadmapEdge& edge) { return edge.to == id; }),
               peer.end());
    nodes_[e.to].dirty = true;
  }
  slot.neighbors.clear();
  slot.alive_ = false;
  index_.remove(id);
  --live_;
}

std::size_t Roadmap::edge_count() const {
  std::size_t twice = 0;
  for (const Slot& s : nodes_)
    if (s.alive_) twice += s.neighbors.size();
  return twice / 2;
}

Vec3 extend_node_to_frontier(const Vec3& n_i, const Vec3& n_f, double delta) {
  const Vec3 diff = n_f - n_i;
  const double len = norm(diff);
  if (len == 0.0) throw DegenerateDirectionError();
  if (len <= delta) return n_f;
  return n_i + diff * (delta / len);
}

StageStats heuristic_sampling_stage(Roadmap& roadmap, const FrontierSet& frontiers,
                                    const OccupancyGrid& grid, const SamplerConfig& cfg,
                                    const CollisionBox& box, Rng& rng) {
  StageStats stats;
  if (frontiers.empty() || roadmap.empty()) return stats;
  while (stats.rejected < cfg.heuristic_budget) {
    const Vec3 frontier_point = weighted_sample_in_frontiers(frontiers, rng);
    const std::vector<NodeId> neighborhood = roadmap.k_nearest(frontier_point, cfg.k);
    for (const NodeId n_i : neighborhood) {
      if (stats.rejected >= cfg.heuristic_budget) break;
      const Vec3 base = roadmap.node(n_i).position;
      if (distance2(base, frontier_point) == 0.0) {
        ++stats.rejected;
        continue;
      }
      const Vec3 candidate = extend_node_to_frontier(base, frontier_point, cfg.delta);
      if (roadmap.try_insert(grid, candidate, cfg, box, NodeOrigin::Heuristic))
        ++stats.accepted;
      else
        ++stats.rejected;
    }
  }
  return stats;
}

namespace {

StageStats uniform_stage(Roadmap& roadmap, const OccupancyGrid& grid, const Aabb& region,
                         int budget, const SamplerConfig& cfg, const CollisionBox& box,
                         NodeOrigin origin, Rng& rng) {
  StageStats stats;
  while (stats.rejected < budget) {
    const Vec3 p = rng.uniform_in_box(region);
    if (roadmap.try_insert(grid, p, cfg, box, origin))
      ++stats.accepted;
    else
      ++stats.rejected;
  }
  return stats;
}

}  // namespace

StageStats local_region_sampling(Roadmap& roadmap, const OccupancyGrid& grid, const Vec3& robot,
                                 const SamplerConfig& cfg, const CollisionBox& box, Rng& rng) {
  const Aabb bounds = grid.bounds();
  Aabb region{robot - cfg.local_region_half, robot + cfg.local_region_half};
  region.min = {std::max(region.min.x, bounds.min.x), std::max(region.min.y, bounds.min.y),
                std::max(region.min.z, bounds.min.z)};
  region.max = {std::min(region.max.x, bounds.max.x), std::min(region.max.y, bounds.max.y),
                std::min(region.max.z, bounds.max.z)};
  return uniform_stage(roadmap, grid, region, cfg.local_budget, cfg, box, NodeOrigin::Local, rng);
}

StageStats global_region_sampling(Roadmap& roadmap, const OccupancyGrid& grid,
                                  const SamplerConfig& cfg, const CollisionBox& box, Rng& rng) {
  return uniform_stage(roadmap, grid, grid.bounds(), cfg.global_budget, cfg, box,
                       NodeOrigin::Global, rng);
}

int connect_nodes(Roadmap& roadmap, const OccupancyGrid& grid, const SamplerConfig& cfg,
                  const CollisionBox& box) {
  int added = 0;
  for (const NodeId a : roadmap.live_ids()) {
    const Vec3 pa = roadmap.node(a).position;
    for (const NodeId b : roadmap.radius_search(pa, cfg.connect_radius)) {
      if (b <= a || roadmap.has_edge(a, b)) continue;
      const Vec3 pb = roadmap.node(b).position;
      if (is_edge_free(grid, pa, pb, box)) {
        roadmap.add_edge(a, b, distance(pa, pb));
        ++added;
      }
    }
  }
  return added;
}

PruneResult prune_invalid(Roadmap& roadmap, const OccupancyGrid& grid, const CollisionBox& box) {
  PruneResult result;
  auto norm_pair = [](NodeId a, NodeId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };

  for (const NodeId id : roadmap.live_ids()) {
    const RoadmapNode& n = roadmap.node(id);
    if (is_node_free(grid, n.position, box)) continue;
    for (const RoadmapEdge& e : n.neighbors) result.removed_edges.push_back(norm_pair(id, e.to));
    roadmap.remove_node(id);
    result.removed_nodes.push_back(id);
  }

  for (const NodeId a : roadmap.live_ids()) {
    const Vec3 pa = roadmap.node(a).position;
    // Copy: we mutate the adjacency while scanning.
    const std::vector<RoadmapEdge> edges = roadmap.node(a).neighbors;
    for (const RoadmapEdge& e : edges) {
      if (e.to <= a) continue;
      if (is_edge_free(grid, pa, roadmap.node(e.to).position, box)) continue;
      roadmap.remove_edge(a, e.to);
      result.removed_edges.push_back(norm_pair(a, e.to));
    }
  }
  return result;
}

}  // namespace hire

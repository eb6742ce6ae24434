#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hire/geometry.hpp"

namespace hire {

using NodeId = std::uint32_t;

/// Dynamic 3-d tree over (position, id) pairs. Inserts append leaves cycling
/// the split axis; removals tombstone and the tree is rebuilt balanced once
/// tombstones outnumber live entries. Queries are exact; equal distances are
/// resolved toward the smaller id so results match a linear scan
/// bit-for-bit.
class KdTree3 {
 public:
  void insert(NodeId id, const Vec3& p);
  void remove(NodeId id);

  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }

  std::optional<NodeId> nearest(const Vec3& query) const;

  /// Up to k closest entries, sorted by (distance, id) ascending.
  std::vector<NodeId> k_nearest(const Vec3& query, std::size_t k) const;

  /// All entries with distance <= radius, sorted by id.
  std::vector<NodeId> radius_search(const Vec3& query, double radius) const;

 private:
  struct Entry {
    Vec3 p;
    NodeId id = 0;
    int left = -1;
    int right = -1;
    std::uint8_t axis = 0;
    bool alive = true;
  };

  struct Best {
    double d2;
    NodeId id;
    bool operator<(const Best& o) const { return d2 < o.d2 || (d2 == o.d2 && id < o.id); }
  };

  std::vector<Entry> entries_;
  std::unordered_map<NodeId, int> slot_of_;
  int root_ = -1;
  std::size_t live_ = 0;
  std::size_t dead_ = 0;

  void rebuild();
  int build_balanced(std::vector<int>& slots, int lo, int hi, int depth);
  void knn_walk(int node, const Vec3& query, std::size_t k, std::vector<Best>& heap) const;
  void radius_walk(int node, const Vec3& query, double r2, std::vector<NodeId>& out) const;
};

}  // namespace hire

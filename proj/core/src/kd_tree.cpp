#include "hire/kd_tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hire {

void KdTree3::insert(NodeId id, const Vec3& p) {
  if (slot_of_.count(id)) throw std::invalid_argument("duplicate kd-tree id");
  const int slot = static_cast<int>(entries_.size());
  Entry e;
  e.p = p;
  e.id = id;

  if (root_ == -1) {
    e.axis = 0;
    entries_.push_back(e);
    root_ = slot;
  } else {
    int cur = root_;
    while (true) {
      Entry& node = entries_[cur];
      const int axis = node.axis;
      int& child = p[axis] < node.p[axis] ? node.left : node.right;
      if (child == -1) {
        e.axis = static_cast<std::uint8_t>((axis + 1) % 3);
        child = slot;
        entries_.push_back(e);
        break;
      }
      cur = child;
    }
  }
  slot_of_.emplace(id, slot);
  ++live_;
}

void KdTree3::remove(NodeId id) {
  const auto it = slot_of_.find(id);
  if (it == slot_of_.end()) throw std::invalid_argument("unknown kd-tree id");
  entries_[it->second].alive = false;
  slot_of_.erase(it);
  --live_;
  ++dead_;
  if (dead_ > live_ && dead_ > 16) rebuild();
}

void KdTree3::rebuild() {
  std::vector<int> slots;
  slots.reserve(live_);
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i)
    if (entries_[i].alive) slots.push_back(i);

  std::vector<Entry> packed;
  packed.reserve(slots.size());
  std::unordered_map<NodeId, int> remap;
  remap.reserve(slots.size());
  for (const int s : slots) {
    remap.emplace(entries_[s].id, static_cast<int>(packed.size()));
    Entry e = entries_[s];
    e.left = e.right = -1;
    packed.push_back(e);
  }
  entries_ = std::move(packed);
  slot_of_ = std::move(remap);
  dead_ = 0;

  std::vector<int> order(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  root_ = build_balanced(order, 0, static_cast<int>(order.size()), 0);
}

int KdTree3::build_balanced(std::vector<int>& slots, int lo, int hi, int depth) {
  if (lo >= hi) return -1;
  const int axis = depth % 3;
  const int mid = lo + (hi - lo) / 2;
  std::nth_element(slots.begin() + lo, slots.begin() + mid, slots.begin() + hi,
                   [&](int a, int b) {
                     const double ca = entries_[a].p[axis], cb = entries_[b].p[axis];
                     return ca < cb || (ca == cb && entries_[a].id < entries_[b].id);
                   });
  const int node = slots[mid];
  entries_[node].axis = static_cast<std::uint8_t>(axis);
  entries_[node].left = build_balanced(slots, lo, mid, depth + 1);
  entries_[node].right = build_balanced(slots, mid + 1, hi, depth + 1);
  return node;
}

void KdTree3::knn_walk(int node, const Vec3& query, std::size_t k,
                       std::vector<Best>& heap) const {
  if (node == -1) return;
  const Entry& e = entries_[node];
  if (e.alive) {
    const Best cand{distance2(e.p, query), e.id};
    if (heap.size() < k) {
      heap.push_back(cand);
      std::push_heap(heap.begin(), heap.end());
    } else if (cand < heap.front()) {
      std::pop_heap(heap.begin(), heap.end());
      heap.back() = cand;
      std::push_heap(heap.begin(), heap.end());
    }
  }
  const double plane_delta = query[e.axis] - e.p[e.axis];
  const int near_child = plane_delta < 0.0 ? e.left : e.right;
  const int far_child = plane_delta < 0.0 ? e.right : e.left;
  knn_walk(near_child, query, k, heap);
  // The far side can still hold an equal-distance entry with a smaller id, so
  // descend on <= rather than <.
  if (heap.size() < k || plane_delta * plane_delta <= heap.front().d2)
    knn_walk(far_child, query, k, heap);
}

std::optional<NodeId> KdTree3::nearest(const Vec3& query) const {
  const auto result = k_nearest(query, 1);
  if (result.empty()) return std::nullopt;
  return result.front();
}

std::vector<NodeId> KdTree3::k_nearest(const Vec3& query, std::size_t k) const {
  std::vector<Best> heap;
  if (k == 0 || live_ == 0) return {};
  heap.reserve(k + 1);
  knn_walk(root_, query, k, heap);
  std::sort_heap(heap.begin(), heap.end());
  std::vector<NodeId> out;
  out.reserve(heap.size());
  for (const Best& b : heap) out.push_back(b.id);
  return out;
}

void KdTree3::radius_walk(int node, const Vec3& query, double r2,
                          std::vector<NodeId>& out) const {
  if (node == -1) return;
  const Entry& e = entries_[node];
  if (e.alive && distance2(e.p, query) <= r2) out.push_back(e.id);
  const double plane_delta = query[e.axis] - e.p[e.axis];
  const int near_child = plane_delta < 0.0 ? e.left : e.right;
  const int far_child = plane_delta < 0.0 ? e.right : e.left;
  radius_walk(near_child, query, r2, out);
  if (plane_delta * plane_delta <= r2) radius_walk(far_child, query, r2, out);
}

std::vector<NodeId> KdTree3::radius_search(const Vec3& query, double radius) const {
  std::vector<NodeId> out;
  radius_walk(root_, query, radius * radius, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hire

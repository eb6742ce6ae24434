#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "hire/geometry.hpp"

namespace hire {

/// Deterministic random source. All transforms are hand-rolled on top of the
/// raw 64-bit stream so that a given seed produces the same draw sequence on
/// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform double in [0, 1) with 53 bits of randomness.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Uniform integer in [0, n). n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  /// Index drawn with probability weights[i] / total. total must equal the sum
  /// of weights and be > 0.
  std::size_t pick_weighted(std::span<const double> weights, double total) {
    const double u = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  Vec3 uniform_in_box(const Aabb& box) {
    return {uniform(box.min.x, box.max.x), uniform(box.min.y, box.max.y),
            uniform(box.min.z, box.max.z)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hire

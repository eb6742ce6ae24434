#pragma once

#include <stdexcept>

#include "hire/geometry.hpp"

namespace hire {

/// Depth camera model: horizontal/vertical field of view and max range.
struct SensorModel {
  double hfov = deg_to_rad(86.0);  // radians
  double vfov = deg_to_rad(57.0);
  double range = 5.0;  // m

  void validate() const {
    if (!(hfov > 0.0 && hfov < std::numbers::pi) || !(vfov > 0.0 && vfov < std::numbers::pi))
      throw std::invalid_argument("sensor FOV must be in (0, 180) degrees");
    if (range <= 0.0) throw std::invalid_argument("sensor range must be > 0");
  }
};

/// Precomputed frustum membership tests for an apex with zero pitch/roll and
/// a radial range cap. The vertical check uses the algebraic tan form so the
/// per-voxel cost stays at a few multiplies.
struct FrustumGeom {
  double range2;
  double tan_half_v_sq;
  double half_hfov;

  explicit FrustumGeom(const SensorModel& s)
      : range2(s.range * s.range), half_hfov(0.5 * s.hfov) {
    const double t = std::tan(0.5 * s.vfov);
    tan_half_v_sq = t * t;
  }

  bool radial_ok(double d2) const { return d2 <= range2; }
  bool vertical_ok(double dz2, double dxy2) const { return dz2 <= tan_half_v_sq * dxy2; }
  bool azimuth_ok(double azimuth, double yaw) const {
    return std::abs(wrap_angle(azimuth - yaw)) <= half_hfov;
  }

  bool contains(const Vec3& d, double yaw) const {
    const double dxy2 = d.x * d.x + d.y * d.y;
    const double dz2 = d.z * d.z;
    return radial_ok(dxy2 + dz2) && vertical_ok(dz2, dxy2) &&
           azimuth_ok(std::atan2(d.y, d.x), yaw);
  }
};

}  // namespace hire

#pragma once

#include <iosfwd>
#include <string>

#include "hire/voxel_map.hpp"

namespace hire {

// Binary grid snapshot, run-length encoded. Little-endian layout:
//   bytes 0..3   magic "HGRD"
//   u32          format version (1)
//   f64 x3       origin x, y, z (m)
//   f64          resolution (m/voxel)
//   i32 x3       dims x, y, z (voxels)
//   repeated     { u32 run_length, u8 state } until dims.x*dims.y*dims.z
//                voxels are covered, in linear order (x fastest, then y, z)

void save_grid(const OccupancyGrid& grid, std::ostream& out);
OccupancyGrid load_grid(std::istream& in);

void save_grid_file(const OccupancyGrid& grid, const std::string& path);
OccupancyGrid load_grid_file(const std::string& path);

}  // namespace hire

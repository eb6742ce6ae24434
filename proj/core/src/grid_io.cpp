#include "hire/grid_io.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace hire {

namespace {

constexpr char kMagic[4] = {'H', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("truncated grid stream");
  return v;
}

}  // namespace

void save_grid(const OccupancyGrid& grid, std::ostream& out) {
  out.write(kMagic, 4);
  write_pod(out, kVersion);
  write_pod(out, grid.origin().x);
  write_pod(out, grid.origin().y);
  write_pod(out, grid.origin().z);
  write_pod(out, grid.resolution());
  write_pod(out, static_cast<std::int32_t>(grid.dims().x));
  write_pod(out, static_cast<std::int32_t>(grid.dims().y));
  write_pod(out, static_cast<std::int32_t>(grid.dims().z));

  const auto states = grid.states();
  std::size_t i = 0;
  while (i < states.size()) {
    const VoxelState s = states[i];
    std::size_t run = 1;
    while (i + run < states.size() && states[i + run] == s &&
           run < std::numeric_limits<std::uint32_t>::max())
      ++run;
    write_pod(out, static_cast<std::uint32_t>(run));
    write_pod(out, static_cast<std::uint8_t>(s));
    i += run;
  }
}

OccupancyGrid load_grid(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a grid snapshot (bad magic)");
  const auto version = read_pod<std::uint32_t>(in);
  if (version != kVersion) throw std::runtime_error("unsupported grid snapshot version");

  Vec3 origin;
  origin.x = read_pod<double>(in);
  origin.y = read_pod<double>(in);
  origin.z = read_pod<double>(in);
  const double resolution = read_pod<double>(in);
  Vec3i dims;
  dims.x = read_pod<std::int32_t>(in);
  dims.y = read_pod<std::int32_t>(in);
  dims.z = read_pod<std::int32_t>(in);

  OccupancyGrid grid(origin, resolution, dims);
  const std::size_t total = grid.voxel_count();
  std::size_t i = 0;
  while (i < total) {
    const auto run = read_pod<std::uint32_t>(in);
    const auto raw = read_pod<std::uint8_t>(in);
    if (raw > 2 || i + run > total) throw std::runtime_error("corrupt grid run-length data");
    const auto s = static_cast<VoxelState>(raw);
    for (std::uint32_t k = 0; k < run; ++k) {
      const std::size_t li = i + k;
      const int x = static_cast<int>(li % dims.x);
      const int y = static_cast<int>((li / dims.x) % dims.y);
      const int z = static_cast<int>(li / (static_cast<std::size_t>(dims.x) * dims.y));
      grid.set_unchecked({x, y, z}, s);
    }
    i += run;
  }
  return grid;
}

void save_grid_file(const OccupancyGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_grid(grid, out);
}

OccupancyGrid load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_grid(in);
}

}  // namespace hire

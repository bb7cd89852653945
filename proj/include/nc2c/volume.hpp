#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nc2c/types.hpp"

namespace nc2c {

// 3-D scalar field of Hounsfield units with physical pose metadata.
// Voxel layout: v[(slice * ny + row) * nx + col], col fastest.
// Index convention for geometry: (col, row, slice) maps through
// origin + row_dir*dx*col + col_dir*dy*row + normal*dz*slice.
struct CTVolume {
  int nx = 0, ny = 0, nz = 0;
  Vec3 spacing{1.0, 1.0, 1.0};   // (dx, dy, dz) mm
  Vec3 origin{0.0, 0.0, 0.0};    // patient coordinates of voxel (0,0,0), mm
  Vec3 row_dir{1.0, 0.0, 0.0};   // direction of increasing column index
  Vec3 col_dir{0.0, 1.0, 0.0};   // direction of increasing row index
  SeriesKind kind = SeriesKind::non_contrast;
  std::vector<float> voxels;

  float& at(int c, int r, int s) { return voxels[(static_cast<size_t>(s) * ny + r) * nx + c]; }
  float at(int c, int r, int s) const { return voxels[(static_cast<size_t>(s) * ny + r) * nx + c]; }
  size_t size() const { return static_cast<size_t>(nx) * ny * nz; }
  Vec3 normal() const { return cross(row_dir, col_dir); }

  // Throws on violated invariants (orthonormal cosines, positive spacing,
  // finite voxels, dims/payload agreement).
  void validate() const;
};

enum class RegionName { inner_lumen, outer_lumen };

struct SegmentationMask {
  int nx = 0, ny = 0, nz = 0;
  RegionName region = RegionName::outer_lumen;
  std::vector<uint8_t> labels;  // values in {0,1}, same layout as CTVolume

  uint8_t& at(int c, int r, int s) { return labels[(static_cast<size_t>(s) * ny + r) * nx + c]; }
  uint8_t at(int c, int r, int s) const { return labels[(static_cast<size_t>(s) * ny + r) * nx + c]; }
  size_t size() const { return static_cast<size_t>(nx) * ny * nz; }
  bool same_grid(const CTVolume& v) const { return nx == v.nx && ny == v.ny && nz == v.nz; }
};

// One axial plane lifted out of a volume. Bit-identical to the parent plane.
struct AxialSlice {
  int nx = 0, ny = 0;
  double z_position = 0.0;  // mm along the slice normal
  double dx = 1.0, dy = 1.0;
  std::vector<float> pixels;

  float& at(int c, int r) { return pixels[static_cast<size_t>(r) * nx + c]; }
  float at(int c, int r) const { return pixels[static_cast<size_t>(r) * nx + c]; }
};

// 2-D binary mask slice used throughout region analysis and warping.
struct MaskSlice {
  int nx = 0, ny = 0;
  std::vector<uint8_t> labels;

  uint8_t& at(int c, int r) { return labels[static_cast<size_t>(r) * nx + c]; }
  uint8_t at(int c, int r) const { return labels[static_cast<size_t>(r) * nx + c]; }
  size_t area() const;
  bool empty() const { return area() == 0; }
};

AxialSlice extract_slice(const CTVolume& volume, int index);
MaskSlice extract_mask_slice(const SegmentationMask& mask, int index);

// Re-stacks slices into a volume with the given pose metadata; inverse of
// extract_slice over all indices.
CTVolume stack_slices(const std::vector<AxialSlice>& slices, const CTVolume& pose_like);

struct HuWindow {
  double lo = -200.0;
  double hi = 500.0;

  double span() const { return hi - lo; }
  void validate() const {
    if (!(lo < hi)) throw ConfigError("HU window requires lo < hi");
  }
};

// Affine map lo -> -1, hi -> +1 with clamping outside the window.
std::vector<float> hu_normalize(const AxialSlice& slice, const HuWindow& window);
float hu_normalize_value(float hu, const HuWindow& window);
float hu_denormalize_value(float n, const HuWindow& window);
std::vector<float> hu_denormalize(const std::vector<float>& normalized, const HuWindow& window);

constexpr float kBackgroundHU = -1024.0f;  // air

// Fixed-size crop centered at (row, col); out-of-bounds area padded with
// background HU.
AxialSlice crop_centered(const AxialSlice& slice, std::pair<int, int> center,
                         std::pair<int, int> size = {256, 256}, float pad_value = kBackgroundHU);
MaskSlice crop_centered(const MaskSlice& mask, std::pair<int, int> center,
                        std::pair<int, int> size = {256, 256});

// Centroid of the nonzero pixels as (row, col); falls back to the slice
// center for an empty mask (documented inference-time behaviour).
std::pair<int, int> mask_centroid(const MaskSlice& mask);

}  // namespace nc2c

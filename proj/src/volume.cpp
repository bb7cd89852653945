#include "nc2c/volume.hpp"

#include <algorithm>
#include <cmath>

namespace nc2c {

void CTVolume::validate() const {
  if (nx <= 0 || ny <= 0 || nz <= 0) throw GridError("volume dimensions must be positive");
  if (voxels.size() != size()) throw GridError("voxel count does not match dimensions");
  if (!(spacing[0] > 0 && spacing[1] > 0 && spacing[2] > 0))
    throw MetadataError("spacing components must be strictly positive");
  if (std::abs(norm(row_dir) - 1.0) > 1e-6 || std::abs(norm(col_dir) - 1.0) > 1e-6)
    throw OrientationError("direction cosines must be unit-norm");
  if (std::abs(dot(row_dir, col_dir)) >= 1e-6)
    throw OrientationError("direction cosines must be orthogonal");
  for (float v : voxels)
    if (!std::isfinite(v)) throw MetadataError("voxel values must be finite");
}

size_t MaskSlice::area() const {
  size_t n = 0;
  for (uint8_t v : labels) n += (v != 0);
  return n;
}

AxialSlice extract_slice(const CTVolume& volume, int index) {
  if (index < 0 || index >= volume.nz) throw BoundsError("slice index out of range");
  AxialSlice s;
  s.nx = volume.nx;
  s.ny = volume.ny;
  s.dx = volume.spacing[0];
  s.dy = volume.spacing[1];
  s.z_position = dot(volume.normal(), volume.origin) + index * volume.spacing[2];
  const float* base = volume.voxels.data() + static_cast<size_t>(index) * volume.nx * volume.ny;
  s.pixels.assign(base, base + static_cast<size_t>(volume.nx) * volume.ny);
  return s;
}

MaskSlice extract_mask_slice(const SegmentationMask& mask, int index) {
  if (index < 0 || index >= mask.nz) throw BoundsError("mask slice index out of range");
  MaskSlice s;
  s.nx = mask.nx;
  s.ny = mask.ny;
  const uint8_t* base = mask.labels.data() + static_cast<size_t>(index) * mask.nx * mask.ny;
  s.labels.assign(base, base + static_cast<size_t>(mask.nx) * mask.ny);
  return s;
}

CTVolume stack_slices(const std::vector<AxialSlice>& slices, const CTVolume& pose_like) {
  if (slices.empty()) throw GridError("cannot stack zero slices");
  CTVolume v = pose_like;
  v.nx = slices[0].nx;
  v.ny = slices[0].ny;
  v.nz = static_cast<int>(slices.size());
  v.voxels.clear();
  v.voxels.reserve(v.size());
  for (const auto& s : slices) {
    if (s.nx != v.nx || s.ny != v.ny) throw GridError("slice shapes differ");
    v.voxels.insert(v.voxels.end(), s.pixels.begin(), s.pixels.end());
  }
  return v;
}

float hu_normalize_value(float hu, const HuWindow& window) {
  double clamped = std::clamp(static_cast<double>(hu), window.lo, window.hi);
  return static_cast<float>(2.0 * (clamped - window.lo) / window.span() - 1.0);
}

float hu_denormalize_value(float n, const HuWindow& window) {
  double clamped = std::clamp(static_cast<double>(n), -1.0, 1.0);
  return static_cast<float>(window.lo + (clamped + 1.0) * 0.5 * window.span());
}

std::vector<float> hu_normalize(const AxialSlice& slice, const HuWindow& window) {
  window.validate();
  std::vector<float> out(slice.pixels.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = hu_normalize_value(slice.pixels[i], window);
  return out;
}

std::vector<float> hu_denormalize(const std::vector<float>& normalized, const HuWindow& window) {
  window.validate();
  std::vector<float> out(normalized.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = hu_denormalize_value(normalized[i], window);
  return out;
}

AxialSlice crop_centered(const AxialSlice& slice, std::pair<int, int> center,
                         std::pair<int, int> size, float pad_value) {
  AxialSlice out;
  out.ny = size.first;
  out.nx = size.second;
  out.dx = slice.dx;
  out.dy = slice.dy;
  out.z_position = slice.z_position;
  out.pixels.assign(static_cast<size_t>(out.nx) * out.ny, pad_value);
  const int r0 = center.first - size.first / 2;
  const int c0 = center.second - size.second / 2;
  for (int r = 0; r < out.ny; ++r) {
    int sr = r0 + r;
    if (sr < 0 || sr >= slice.ny) continue;
    for (int c = 0; c < out.nx; ++c) {
      int sc = c0 + c;
      if (sc < 0 || sc >= slice.nx) continue;
      out.at(c, r) = slice.at(sc, sr);
    }
  }
  return out;
}

MaskSlice crop_centered(const MaskSlice& mask, std::pair<int, int> center,
                        std::pair<int, int> size) {
  MaskSlice out;
  out.ny = size.first;
  out.nx = size.second;
  out.labels.assign(static_cast<size_t>(out.nx) * out.ny, 0);
  const int r0 = center.first - size.first / 2;
  const int c0 = center.second - size.second / 2;
  for (int r = 0; r < out.ny; ++r) {
    int sr = r0 + r;
    if (sr < 0 || sr >= mask.ny) continue;
    for (int c = 0; c < out.nx; ++c) {
      int sc = c0 + c;
      if (sc < 0 || sc >= mask.nx) continue;
      out.at(c, r) = mask.at(sc, sr);
    }
  }
  return out;
}

std::pair<int, int> mask_centroid(const MaskSlice& mask) {
  double sr = 0, sc = 0;
  size_t n = 0;
  for (int r = 0; r < mask.ny; ++r)
    for (int c = 0; c < mask.nx; ++c)
      if (mask.at(c, r)) {
        sr += r;
        sc += c;
        ++n;
      }
  if (n == 0) return {mask.ny / 2, mask.nx / 2};
  return {static_cast<int>(std::lround(sr / n)), static_cast<int>(std::lround(sc / n))};
}

}  // namespace nc2c

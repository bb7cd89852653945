#pragma once

#include <filesystem>
#include <string>

#include "nc2c/volume.hpp"

namespace nc2c {

// Portable raw-volume interchange: `<name>.vol` little-endian float32
// payload next to a `<name>.volh` UTF-8 key=value header with keys
// dims, spacing, origin, orientation, kind, slope, intercept.
//
// `path` may be given with or without the .vol extension.

void save_volume_bundle(const CTVolume& volume, const std::filesystem::path& path);
CTVolume load_volume_bundle(const std::filesystem::path& path);

void save_mask_bundle(const SegmentationMask& mask, const CTVolume& grid,
                      const std::filesystem::path& path);

// Loads a mask bundle and binarizes it (nonzero -> 1) against the given grid.
SegmentationMask load_mask(const std::filesystem::path& path, const CTVolume& grid,
                           RegionName region);

}  // namespace nc2c

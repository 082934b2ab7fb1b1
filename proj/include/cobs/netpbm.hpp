#pragma once

#include <filesystem>
#include <utility>

#include "cobs/types.hpp"

namespace cobs {

// Binary netpbm codecs used by the episode layout. All of them round-trip
// bit-exactly for files they wrote themselves.
//
//   images  - P6, maxval 255
//   masks   - P5, maxval 255; samples >= 128 decode to 1, encoded as 255
//   depth   - P5, maxval 65535, big-endian samples; sample/65535 is the
//             relative depth value. A text sidecar (<path>.range) records the
//             pre-quantization min/max so raw depth can be recovered.

void write_ppm(const std::filesystem::path& path, const Image& image);
Image read_ppm(const std::filesystem::path& path);

void write_mask_pgm(const std::filesystem::path& path, const Mask& mask);
Mask read_mask_pgm(const std::filesystem::path& path);

// Requires values in [0,1]; quantizes to 16 bits and writes the sidecar.
void write_depth_pgm16(const std::filesystem::path& path, const DepthMap& depth);
// Decoded values are sample/65535, in [0,1].
DepthMap read_depth_pgm16(const std::filesystem::path& path);

// Pre-quantization (min, max) recorded next to a depth file.
std::pair<double, double> read_depth_range(const std::filesystem::path& path);

}  // namespace cobs

#pragma once

#include <cstdint>
#include <optional>

#include "cobs/types.hpp"

namespace cobs {

// Per-frame query handed to a perception provider.
struct PerceptionRequest {
  std::uint64_t frame_id = 0;
  Image frame;
  TaskSpec spec;
};

// What a provider returns for one frame. Latencies are wall-clock seconds
// per stage and never influence downstream observation content.
struct PerceptionResult {
  Mask robot;
  Mask object;
  std::optional<DepthMap> depth;
  double segment_latency_s = 0.0;
  double depth_latency_s = 0.0;
};

// Content comparison; latency fields are deliberately excluded.
inline bool same_content(const PerceptionResult& a, const PerceptionResult& b) {
  return a.robot == b.robot && a.object == b.object && a.depth == b.depth;
}

// Parameters of the synthetic mask-corruption model (a stand-in for the
// quality gap between pretrained and adapted segmenters).
//
// The model, applied to each mask independently and in this order:
//   1. dilate by dilation_radius, then erode by erosion_radius
//      (8-neighborhood rounds);
//   2. flip pixels independently with probability flip_rate inside the band
//      of pixels within ceil(flip_rate * max(W,H)) 8-neighborhood steps of
//      the mask boundary. Draws are row-major, one uniform per band pixel,
//      from mt19937_64(seed) (robot mask) and mt19937_64(seed + 1) (object).
//
// flip_rate = 1 therefore complements any mask that has a boundary.
struct MaskDegradation {
  int dilation_radius = 0;
  int erosion_radius = 0;
  double flip_rate = 0.0;
  std::uint64_t seed = 0;

  bool is_identity() const {
    return dilation_radius == 0 && erosion_radius == 0 && flip_rate == 0.0;
  }
};

PerceptionResult degrade_masks(const PerceptionResult& result, const MaskDegradation& degradation);

// Single-mask version, used by the result-level wrapper and the tests.
Mask degrade_mask(const Mask& mask, const MaskDegradation& degradation, std::uint64_t seed);

}  // namespace cobs

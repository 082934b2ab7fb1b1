#pragma once

#include <optional>
#include <vector>

#include "cobs/types.hpp"

namespace cobs {

// Pixelwise OR over a nonempty list of same-shaped masks.
Mask mask_union(const std::vector<Mask>& masks);

// Complement of mask_union({robot, object}).
Mask background_mask(const Mask& robot, const Mask& object);

// Canonical label-colored rendering: background, then robot, then object.
// Where robot and object overlap, the object color wins.
Image repaint_l0(const Mask& robot, const Mask& object, const EntityPalette& palette);

struct NormalizedDepth {
  DepthMap depth;
  // True when the mask selected no pixels; the map is then all-zero.
  bool empty_region = false;
};

// Min-max normalization of depth over the masked region; zero outside.
// Inside the mask: (d - d_min) / (d_max - d_min + epsilon).
NormalizedDepth normalize_depth_in_mask(const DepthMap& depth, const Mask& object,
                                        double epsilon);

// Overwrites the object region of an L0 canvas with tiled quantized depth
// (round(255*x), ties away from zero). Pixels outside the mask are copied
// bit-identically. depth_norm values must lie in [0,1].
Image fuse_l1(const Image& l0, const Mask& object, const DepthMap& depth_norm);

// Per-frame transform producing the requested observation variant.
// depth must be present for L1 and S2.
Observation build_observation(const Image& frame, const Mask& robot, const Mask& object,
                              const std::optional<DepthMap>& depth, const TaskSpec& spec,
                              Variant variant);

// Intersection over union; 1.0 when both masks are empty.
double mask_iou(const Mask& predicted, const Mask& truth);

}  // namespace cobs

#include "cobs/obs_ops.hpp"

#include <cmath>
#include <limits>

namespace cobs {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::ORG: return "ORG";
    case Variant::L0: return "L0";
    case Variant::L1: return "L1";
    case Variant::S2: return "S2";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
  if (name == "ORG" || name == "org") return Variant::ORG;
  if (name == "L0" || name == "l0") return Variant::L0;
  if (name == "L1" || name == "l1") return Variant::L1;
  if (name == "S2" || name == "s2") return Variant::S2;
  return std::nullopt;
}

namespace {

void require_same_shape(const char* what, int w1, int h1, int w2, int h2) {
  if (w1 != w2 || h1 != h2) throw DimensionMismatch(what, w1, h1, w2, h2);
}

}  // namespace

Mask mask_union(const std::vector<Mask>& masks) {
  if (masks.empty()) throw Error("mask_union: empty mask list");
  Mask out = masks.front();
  for (size_t i = 1; i < masks.size(); ++i) {
    const Mask& m = masks[i];
    require_same_shape("mask_union: mask dimensions", out.width, out.height, m.width, m.height);
    for (size_t p = 0; p < out.bits.size(); ++p)
      out.bits[p] = (out.bits[p] | m.bits[p]) ? 1 : 0;
  }
  return out;
}

Mask background_mask(const Mask& robot, const Mask& object) {
  require_same_shape("background_mask: mask dimensions", robot.width, robot.height,
                     object.width, object.height);
  Mask out(robot.width, robot.height);
  for (size_t p = 0; p < out.bits.size(); ++p)
    out.bits[p] = (robot.bits[p] || object.bits[p]) ? 0 : 1;
  return out;
}

Image repaint_l0(const Mask& robot, const Mask& object, const EntityPalette& palette) {
  require_same_shape("repaint_l0: mask dimensions", robot.width, robot.height,
                     object.width, object.height);
  if (!palette.valid()) throw Error("repaint_l0: palette colors must be pairwise distinct");
  Image out(robot.width, robot.height);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      Rgb c = palette.background;
      if (robot.at(x, y)) c = palette.robot;
      if (object.at(x, y)) c = palette.object;
      out.set(x, y, c);
    }
  }
  return out;
}

NormalizedDepth normalize_depth_in_mask(const DepthMap& depth, const Mask& object,
                                        double epsilon) {
  require_same_shape("normalize_depth_in_mask: dimensions", depth.width, depth.height,
                     object.width, object.height);
  if (!(epsilon > 0.0)) throw Error("normalize_depth_in_mask: epsilon must be > 0");

  NormalizedDepth result;
  result.depth = DepthMap(depth.width, depth.height, 0.0);

  double d_min = std::numeric_limits<double>::infinity();
  double d_max = -std::numeric_limits<double>::infinity();
  size_t inside = 0;
  for (size_t p = 0; p < object.bits.size(); ++p) {
    if (!object.bits[p]) continue;
    ++inside;
    d_min = std::min(d_min, depth.values[p]);
    d_max = std::max(d_max, depth.values[p]);
  }
  if (inside == 0) {
    result.empty_region = true;
    return result;
  }
  const double denom = d_max - d_min + epsilon;
  for (size_t p = 0; p < object.bits.size(); ++p) {
    if (object.bits[p]) result.depth.values[p] = (depth.values[p] - d_min) / denom;
  }
  return result;
}

Image fuse_l1(const Image& l0, const Mask& object, const DepthMap& depth_norm) {
  require_same_shape("fuse_l1: image/mask dimensions", l0.width, l0.height,
                     object.width, object.height);
  require_same_shape("fuse_l1: image/depth dimensions", l0.width, l0.height,
                     depth_norm.width, depth_norm.height);
  Image out = l0;
  for (size_t p = 0; p < object.bits.size(); ++p) {
    if (!object.bits[p]) continue;
    const double d = depth_norm.values[p];
    if (!(d >= 0.0 && d <= 1.0))
      throw Error("fuse_l1: depth value " + std::to_string(d) +
                  " outside [0,1]; normalize first");
    const auto v = static_cast<std::uint8_t>(std::round(255.0 * d));
    out.data[p * 3 + 0] = v;
    out.data[p * 3 + 1] = v;
    out.data[p * 3 + 2] = v;
  }
  return out;
}

Observation build_observation(const Image& frame, const Mask& robot, const Mask& object,
                              const std::optional<DepthMap>& depth, const TaskSpec& spec,
                              Variant variant) {
  require_same_shape("build_observation: frame/robot dimensions", frame.width, frame.height,
                     robot.width, robot.height);
  require_same_shape("build_observation: frame/object dimensions", frame.width, frame.height,
                     object.width, object.height);

  Observation obs;
  obs.variant = variant;

  if (variant == Variant::ORG) {
    obs.image = frame;
    return obs;
  }

  // Table-IV-style ablation: drop the robot entity from the repainted canvas.
  Mask zero_robot;
  const Mask* effective_robot = &robot;
  if (!spec.include_robot_mask) {
    zero_robot = Mask(robot.width, robot.height);
    effective_robot = &zero_robot;
  }

  if (variant == Variant::L0) {
    obs.image = repaint_l0(*effective_robot, object, spec.palette);
    return obs;
  }

  if (!depth.has_value())
    throw MissingInput(std::string("build_observation: variant ") + variant_name(variant) +
                       " requires a depth map");
  require_same_shape("build_observation: frame/depth dimensions", frame.width, frame.height,
                     depth->width, depth->height);

  NormalizedDepth norm = normalize_depth_in_mask(*depth, object, spec.epsilon);

  if (variant == Variant::L1) {
    Image l0 = repaint_l0(*effective_robot, object, spec.palette);
    obs.image = fuse_l1(l0, object, norm.depth);
    obs.empty_object_region = norm.empty_region;
    return obs;
  }

  // S2: two planes, object mask and mask-normalized depth.
  obs.mask_plane = object;
  obs.depth_plane = std::move(norm.depth);
  obs.empty_object_region = norm.empty_region;
  return obs;
}

double mask_iou(const Mask& predicted, const Mask& truth) {
  require_same_shape("mask_iou: mask dimensions", predicted.width, predicted.height,
                     truth.width, truth.height);
  size_t inter = 0, uni = 0;
  for (size_t p = 0; p < predicted.bits.size(); ++p) {
    const bool a = predicted.bits[p], b = truth.bits[p];
    inter += (a && b);
    uni += (a || b);
  }
  if (uni == 0) return 1.0;  // agreement on absence
  return double(inter) / double(uni);
}

}  // namespace cobs

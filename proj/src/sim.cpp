#include "cobs/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cobs/rng.hpp"

namespace cobs::sim {

namespace {

constexpr double kGripperHalfWidth = 0.045;   // palm half-extent
constexpr double kPalmHalfHeight = 0.010;
constexpr double kPalmOffsetY = 0.035;        // palm sits above the prongs
constexpr double kProngHalfHeight = 0.035;
constexpr double kProngHalfWidth = 0.010;
constexpr double kProngOpenOffset = 0.035;
constexpr double kProngClosedOffset = 0.020;
constexpr Rgb kGripperColor{120, 130, 150};

constexpr double kExpertCloseDistance = 0.03;
constexpr double kExpertGain = 1.0;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

bool in_rect(double wx, double wy, double cx, double cy, double hw, double hh) {
  return std::abs(wx - cx) <= hw && std::abs(wy - cy) <= hh;
}

bool gripper_hit(const SceneState& s, double wx, double wy) {
  const double off = s.gripper_closed ? kProngClosedOffset : kProngOpenOffset;
  if (in_rect(wx, wy, s.gripper_x, s.gripper_y + kPalmOffsetY, kGripperHalfWidth, kPalmHalfHeight))
    return true;
  if (in_rect(wx, wy, s.gripper_x - off, s.gripper_y, kProngHalfWidth, kProngHalfHeight))
    return true;
  return in_rect(wx, wy, s.gripper_x + off, s.gripper_y, kProngHalfWidth, kProngHalfHeight);
}

bool disc_hit(double wx, double wy, double cx, double cy, double r) {
  const double dx = wx - cx, dy = wy - cy;
  return dx * dx + dy * dy <= r * r;
}

// Geometry-dependent, theme-independent noise hash so recoloring a scene
// keeps the same noise pattern.
std::uint64_t scene_noise_key(const SceneState& s) {
  auto bits = [](double v) {
    std::uint64_t u;
    static_assert(sizeof(u) == sizeof(v));
    std::memcpy(&u, &v, sizeof u);
    return u;
  };
  std::uint64_t k = mix_seed(bits(s.gripper_x), bits(s.gripper_y));
  k = mix_seed(k, bits(s.object_x));
  k = mix_seed(k, bits(s.object_y));
  k = mix_seed(k, s.gripper_closed ? 1 : 0);
  return k;
}

std::uint8_t add_noise(std::uint8_t v, int amp, std::uint64_t key, int x, int y, int c) {
  if (amp == 0) return v;
  const std::uint64_t h = mix_seed(key, (std::uint64_t(y) << 24) ^ (std::uint64_t(x) << 4) ^ unsigned(c));
  const int offset = int(h % (2 * unsigned(amp) + 1)) - amp;
  return std::uint8_t(std::clamp(int(v) + offset, 0, 255));
}

struct ThemeTable {
  AppearanceTheme id, obj1, obj2, obj3, bg1, bg2, bg3;
};

const ThemeTable& themes() {
  static const ThemeTable t = [] {
    ThemeTable tt;
    tt.id.name = "train";
    tt.id.table_color = {70, 85, 105};
    tt.id.object_color = {230, 90, 60};
    tt.id.distractor_palette = {{200, 200, 80}, {90, 60, 160}};

    auto obj = [&](const char* name, Rgb c) {
      AppearanceTheme th = tt.id;
      th.name = name;
      th.object_color = c;
      return th;
    };
    tt.obj1 = obj("ood-obj-1", {60, 200, 90});
    tt.obj2 = obj("ood-obj-2", {235, 205, 60});
    tt.obj3 = obj("ood-obj-3", {150, 80, 220});

    auto bg = [&](const char* name, Rgb table, std::vector<Rgb> palette) {
      AppearanceTheme th = tt.id;
      th.name = name;
      th.table_color = table;
      th.distractor_palette = std::move(palette);
      return th;
    };
    tt.bg1 = bg("ood-bg-1", {170, 60, 70}, {{230, 230, 230}, {40, 40, 40}});
    tt.bg2 = bg("ood-bg-2", {60, 160, 80}, {{220, 210, 90}, {120, 200, 220}});
    tt.bg3 = bg("ood-bg-3", {200, 170, 90}, {{60, 60, 60}, {90, 60, 160}, {240, 240, 240}});
    return tt;
  }();
  return t;
}

}  // namespace

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::ID: return "ID";
    case Condition::OOD_OBJ_1: return "OOD_OBJ_1";
    case Condition::OOD_OBJ_2: return "OOD_OBJ_2";
    case Condition::OOD_OBJ_3: return "OOD_OBJ_3";
    case Condition::OOD_BG_1: return "OOD_BG_1";
    case Condition::OOD_BG_2: return "OOD_BG_2";
    case Condition::OOD_BG_3: return "OOD_BG_3";
  }
  return "?";
}

std::optional<Condition> parse_condition(const std::string& name) {
  for (Condition c : all_conditions())
    if (name == condition_name(c)) return c;
  return std::nullopt;
}

const std::vector<Condition>& all_conditions() {
  static const std::vector<Condition> all = {
      Condition::ID,       Condition::OOD_OBJ_1, Condition::OOD_OBJ_2, Condition::OOD_OBJ_3,
      Condition::OOD_BG_1, Condition::OOD_BG_2,  Condition::OOD_BG_3};
  return all;
}

bool is_ood(Condition c) { return c != Condition::ID; }

const AppearanceTheme& theme_for(Condition c) {
  const ThemeTable& t = themes();
  switch (c) {
    case Condition::ID: return t.id;
    case Condition::OOD_OBJ_1: return t.obj1;
    case Condition::OOD_OBJ_2: return t.obj2;
    case Condition::OOD_OBJ_3: return t.obj3;
    case Condition::OOD_BG_1: return t.bg1;
    case Condition::OOD_BG_2: return t.bg2;
    case Condition::OOD_BG_3: return t.bg3;
  }
  throw Error("unknown condition");
}

Image render(const SceneState& scene, int resolution) {
  Image img(resolution, resolution);
  const std::uint64_t noise_key = scene_noise_key(scene);
  const int amp = scene.appearance.noise_amplitude;

  for (int py = 0; py < resolution; ++py) {
    const double wy = 1.0 - (py + 0.5) / resolution;
    for (int px = 0; px < resolution; ++px) {
      const double wx = (px + 0.5) / resolution;

      Rgb c = scene.appearance.table_color;
      for (const Distractor& d : scene.distractors)
        if (disc_hit(wx, wy, d.x, d.y, d.radius)) c = d.color;
      if (disc_hit(wx, wy, scene.object_x, scene.object_y, kObjectRadius))
        c = scene.appearance.object_color;
      if (gripper_hit(scene, wx, wy)) c = kGripperColor;

      if (amp > 0)
        for (int ch = 0; ch < 3; ++ch) c[ch] = add_noise(c[ch], amp, noise_key, px, py, ch);
      img.set(px, py, c);
    }
  }
  return img;
}

PerceptionResult ground_truth(const SceneState& scene, int resolution) {
  PerceptionResult out;
  out.robot = Mask(resolution, resolution);
  out.object = Mask(resolution, resolution);
  DepthMap depth(resolution, resolution, 1.0);

  for (int py = 0; py < resolution; ++py) {
    const double wy = 1.0 - (py + 0.5) / resolution;
    for (int px = 0; px < resolution; ++px) {
      const double wx = (px + 0.5) / resolution;
      const bool on_gripper = gripper_hit(scene, wx, wy);
      if (on_gripper) out.robot.at(px, py) = 1;
      const double dx = wx - scene.object_x, dy = wy - scene.object_y;
      const double d2 = dx * dx + dy * dy;
      if (!on_gripper && d2 <= kObjectRadius * kObjectRadius) {
        out.object.at(px, py) = 1;
        // Radial bulge toward the camera, center nearest.
        const double t = 1.0 - d2 / (kObjectRadius * kObjectRadius);
        depth.at(px, py) = 1.0 - 0.5 * std::sqrt(t);
      }
    }
  }
  out.depth = std::move(depth);
  return out;
}

SceneState step(const SceneState& scene, const Action& action) {
  SceneState next = scene;
  const double dx = std::clamp(action.dx, -kMaxStep, kMaxStep);
  const double dy = std::clamp(action.dy, -kMaxStep, kMaxStep);
  next.gripper_x = clamp01(scene.gripper_x + dx);
  next.gripper_y = clamp01(scene.gripper_y + dy);
  next.gripper_closed = action.grip > 0.0;

  if (next.object_attached && !next.gripper_closed) next.object_attached = false;
  if (!next.object_attached && next.gripper_closed) {
    const double ox = next.object_x - next.gripper_x;
    const double oy = next.object_y - next.gripper_y;
    if (ox * ox + oy * oy <= kGraspRadius * kGraspRadius) next.object_attached = true;
  }
  if (next.object_attached) {
    next.object_x = next.gripper_x;
    next.object_y = next.gripper_y;
    if (next.gripper_y >= kLiftLine) next.object_lifted = true;
  }
  return next;
}

Action scripted_expert(const SceneState& scene) {
  Action a;
  if (!scene.object_attached) {
    const double dx = scene.object_x - scene.gripper_x;
    const double dy = scene.object_y - scene.gripper_y;
    if (std::hypot(dx, dy) > kExpertCloseDistance) {
      a.dx = std::clamp(kExpertGain * dx, -kMaxStep, kMaxStep);
      a.dy = std::clamp(kExpertGain * dy, -kMaxStep, kMaxStep);
      a.grip = -1.0;
    } else {
      a.grip = 1.0;
    }
  } else {
    a.grip = 1.0;
    if (scene.gripper_y < kLiftLine)
      a.dy = std::clamp(kLiftLine - scene.gripper_y + 0.01, 0.0, kMaxStep);
  }
  return a;
}

SceneState sample_scene(Condition condition, std::uint64_t seed) {
  SceneState s;
  s.appearance = theme_for(condition);

  Rng geom(derive_seed(seed, "geometry"));
  s.object_x = geom.uniform(0.15, 0.85);
  s.object_y = geom.uniform(0.10, 0.40);
  s.gripper_x = geom.uniform(0.10, 0.90);
  s.gripper_y = geom.uniform(0.55, 0.95);

  int n_distractors = 0;
  switch (condition) {
    case Condition::OOD_BG_1: n_distractors = 2; break;
    case Condition::OOD_BG_2: n_distractors = 3; break;
    case Condition::OOD_BG_3: n_distractors = 4; break;
    default: break;
  }
  if (n_distractors > 0) {
    Rng clutter(derive_seed(seed, "clutter"));
    const auto& palette = s.appearance.distractor_palette;
    while (int(s.distractors.size()) < n_distractors) {
      Distractor d;
      d.x = clutter.uniform(0.08, 0.92);
      d.y = clutter.uniform(0.08, 0.92);
      d.radius = clutter.uniform(0.04, 0.10);
      d.color = palette[clutter.below(palette.size())];
      // Never spawn on top of the target object.
      const double gap = std::hypot(d.x - s.object_x, d.y - s.object_y);
      if (gap >= d.radius + kObjectRadius + 0.02) s.distractors.push_back(d);
    }
  }
  return s;
}

Episode run_expert_episode(SceneState scene, std::uint64_t seed, int resolution, int max_steps) {
  Episode ep;
  ep.seed = seed;
  ep.frames.push_back(render(scene, resolution));
  ep.perception.push_back(ground_truth(scene, resolution));
  for (int t = 0; t < max_steps && !scene.object_lifted; ++t) {
    const Action a = scripted_expert(scene);
    scene = step(scene, a);
    ep.actions.push_back(a);
    ep.frames.push_back(render(scene, resolution));
    ep.perception.push_back(ground_truth(scene, resolution));
  }
  ep.success = scene.object_lifted;
  return ep;
}

}  // namespace cobs::sim

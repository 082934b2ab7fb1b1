#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobs/perception.hpp"
#include "cobs/types.hpp"

namespace cobs::sim {

// World units span [0,1]^2 with y pointing up; rendering maps y=1 to the top
// image row.
constexpr double kMaxStep = 0.05;          // per-component action clip
constexpr double kGraspRadius = 0.04;      // close within this of the object to attach
constexpr double kLiftLine = 0.8;          // carry the object above this to succeed
constexpr double kObjectRadius = 0.08;
constexpr int kDefaultResolution = 64;
constexpr int kDefaultMaxSteps = 200;

struct AppearanceTheme {
  std::string name = "train";
  int version = 1;
  Rgb table_color{70, 85, 105};
  Rgb object_color{230, 90, 60};
  std::vector<Rgb> distractor_palette;
  int noise_amplitude = 0;  // 0..255, additive per-pixel
};

struct Distractor {
  double x = 0, y = 0, radius = 0.05;
  Rgb color{0, 0, 0};
};

struct SceneState {
  double gripper_x = 0.5, gripper_y = 0.8;
  bool gripper_closed = false;
  double object_x = 0.5, object_y = 0.2;
  bool object_attached = false;
  bool object_lifted = false;
  std::vector<Distractor> distractors;
  AppearanceTheme appearance;
};

// d_a = 3: planar gripper displacement plus a grip channel whose sign is
// thresholded to open/close.
struct Action {
  double dx = 0, dy = 0;
  double grip = 0;
};

enum class Condition { ID, OOD_OBJ_1, OOD_OBJ_2, OOD_OBJ_3, OOD_BG_1, OOD_BG_2, OOD_BG_3 };

const char* condition_name(Condition c);
std::optional<Condition> parse_condition(const std::string& name);
const std::vector<Condition>& all_conditions();
bool is_ood(Condition c);

// Named, versioned appearance themes; geometry never depends on these.
const AppearanceTheme& theme_for(Condition c);

struct Episode {
  std::vector<Image> frames;
  std::vector<PerceptionResult> perception;
  std::vector<Action> actions;
  bool success = false;
  std::uint64_t seed = 0;
  std::string failure;  // diagnostic when a provider failed mid-rollout
};

// Deterministic raster of the scene: table, distractors, object disc,
// U-shaped gripper, in painter's order, plus optional seeded pixel noise.
Image render(const SceneState& scene, int resolution);

// Exact entity masks (occlusion-aware) and the height-field depth: flat 1.0
// except over visible object pixels, where the disc bulges toward the camera
// (center nearest, down to 0.5).
PerceptionResult ground_truth(const SceneState& scene, int resolution);

SceneState step(const SceneState& scene, const Action& action);

// Proportional pick-and-lift controller; succeeds well within 200 steps from
// any sampled scene.
Action scripted_expert(const SceneState& scene);

// ID draws the training theme and zero distractors; OOD_OBJ_k recolors the
// object; OOD_BG_k recolors the table and adds k+1 distractors. The gripper
// and object positions come from a seed stream shared by all conditions.
SceneState sample_scene(Condition condition, std::uint64_t seed);

// Runs the scripted expert from the given start scene, recording frames,
// ground-truth perception, and actions.
Episode run_expert_episode(SceneState scene, std::uint64_t seed, int resolution,
                           int max_steps = kDefaultMaxSteps);

}  // namespace cobs::sim

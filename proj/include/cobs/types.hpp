#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobs {

using Rgb = std::array<std::uint8_t, 3>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two rasters that were required to share a shape did not.
struct DimensionMismatch : Error {
  DimensionMismatch(const std::string& what, int w1, int h1, int w2, int h2)
      : Error(what + ": " + std::to_string(w1) + "x" + std::to_string(h1) +
              " vs " + std::to_string(w2) + "x" + std::to_string(h2)) {}
};

struct MissingInput : Error {
  using Error::Error;
};

struct CodecError : Error {
  using Error::Error;
};

// Row-major 8-bit RGB raster.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width*height*3, interleaved RGB

  Image() = default;
  Image(int w, int h) : width(w), height(h), data(size_t(w) * h * 3, 0) {}

  std::uint8_t* px(int x, int y) { return data.data() + (size_t(y) * width + x) * 3; }
  const std::uint8_t* px(int x, int y) const { return data.data() + (size_t(y) * width + x) * 3; }

  void set(int x, int y, Rgb c) {
    auto* p = px(x, y);
    p[0] = c[0]; p[1] = c[1]; p[2] = c[2];
  }
  Rgb get(int x, int y) const {
    const auto* p = px(x, y);
    return {p[0], p[1], p[2]};
  }

  bool same_shape(int w, int h) const { return width == w && height == h; }
  friend bool operator==(const Image&, const Image&) = default;
};

// Row-major binary raster; every element is 0 or 1.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  Mask() = default;
  Mask(int w, int h) : width(w), height(h), bits(size_t(w) * h, 0) {}

  std::uint8_t& at(int x, int y) { return bits[size_t(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return bits[size_t(y) * width + x]; }

  size_t count() const {
    size_t n = 0;
    for (auto b : bits) n += b;
    return n;
  }
  bool same_shape(int w, int h) const { return width == w && height == h; }
  friend bool operator==(const Mask&, const Mask&) = default;
};

// Row-major nonnegative scalar raster (relative depth, unitless).
struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  DepthMap() = default;
  DepthMap(int w, int h, double fill = 0.0)
      : width(w), height(h), values(size_t(w) * h, fill) {}

  double& at(int x, int y) { return values[size_t(y) * width + x]; }
  double at(int x, int y) const { return values[size_t(y) * width + x]; }

  bool same_shape(int w, int h) const { return width == w && height == h; }
  friend bool operator==(const DepthMap&, const DepthMap&) = default;
};

// Fixed entity colors for the repainted canvas. Colors must be pairwise
// distinct; the background defaults to black.
struct EntityPalette {
  Rgb background{0, 0, 0};
  Rgb robot{255, 0, 0};
  Rgb object{0, 255, 0};

  bool valid() const {
    return background != robot && background != object && robot != object;
  }
};

enum class Variant { ORG, L0, L1, S2 };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

// Task specification: which entities to extract and how to paint them.
struct TaskSpec {
  std::string object_label = "target object";
  std::string robot_label = "robot gripper";
  bool include_robot_mask = true;
  EntityPalette palette;
  double epsilon = 1e-6;
};

// Canonical policy input. ORG/L0/L1 carry a 3-channel image; S2 carries a
// binary mask plane plus a normalized depth plane of the same shape.
struct Observation {
  Variant variant = Variant::ORG;
  Image image;           // ORG / L0 / L1
  Mask mask_plane;       // S2
  DepthMap depth_plane;  // S2, values in [0,1]
  // Set when the object mask was empty and the depth region degraded to
  // all-zero instead of aborting.
  bool empty_object_region = false;

  int width() const { return variant == Variant::S2 ? mask_plane.width : image.width; }
  int height() const { return variant == Variant::S2 ? mask_plane.height : image.height; }
  friend bool operator==(const Observation&, const Observation&) = default;
};

}  // namespace cobs

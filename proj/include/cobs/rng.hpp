#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace cobs {

// Deterministic stream derivation. splitmix64 finalizer over a seed mixed
// with a tag, so unrelated consumers of one base seed never share a stream.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t tag_hash(std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                 std::uint64_t index = 0) {
  return mix_seed(mix_seed(base, tag_hash(tag)), index);
}

// mt19937_64 with fully specified output transforms, so sequences are
// bit-reproducible across platforms (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // Standard normal via Box-Muller; second value cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cobs

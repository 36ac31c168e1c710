#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace dfo {

/// SplitMix64 finalizer; used to derive sub-seeds and to key the
/// deterministic oracle noise off value bit patterns.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based pseudo-random generator (Philox4x32-10).
///
/// Every draw is a pure function of (seed, stream, counter), so replicas can
/// own independent streams and any run can be replayed bit-for-bit. The
/// counter layout is: words 0-1 hold the per-stream block counter, words 2-3
/// hold the stream id. The key is the 64-bit seed.
class Rng {
 public:
  Rng() : Rng(0, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
    ctr_[0] = 0;
    ctr_[1] = 0;
    ctr_[2] = static_cast<std::uint32_t>(stream);
    ctr_[3] = static_cast<std::uint32_t>(stream >> 32);
  }

  std::uint32_t next_u32() {
    if (have_ == 0) {
      block_ = philox4x32(ctr_, key_);
      // 64-bit block counter in words 0-1
      if (++ctr_[0] == 0) ++ctr_[1];
      have_ = 4;
    }
    return block_[4 - have_--];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform double in the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; one value per pair of uniforms.
  double normal() {
    if (have_normal_) {
      have_normal_ = false;
      return cached_normal_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(a);
    have_normal_ = true;
    return r * std::cos(a);
  }

  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  /// Compact identity of the stream position: same (seed, stream, counter)
  /// gives the same tag, so a draw's provenance can be recorded and replayed.
  std::uint64_t provenance_tag() const {
    const std::uint64_t key = (std::uint64_t(key_[1]) << 32) | key_[0];
    const std::uint64_t stream = (std::uint64_t(ctr_[3]) << 32) | ctr_[2];
    const std::uint64_t consumed = ((std::uint64_t(ctr_[1]) << 32) | ctr_[0]) * 4 - have_;
    return mix64(key) ^ mix64(stream + 0x632BE59BD9B4E019ull) ^ mix64(consumed + 1);
  }

  /// One 10-round Philox4x32 block; exposed for known-answer tests.
  static Block philox4x32(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
      const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  Key key_{};
  Block ctr_{};
  Block block_{};
  int have_ = 0;
  bool have_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace dfo

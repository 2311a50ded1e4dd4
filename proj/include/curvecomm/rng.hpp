#pragma once

#include <array>
#include <cstdint>

namespace curvecomm {

/// Philox 4x32-10 counter-based stream (Salmon et al., SC 2011).
///
/// A stream is addressed by (seed, stream): the 64-bit master seed is the
/// Philox key and the stream id occupies the upper counter half, so any
/// substream can be opened in O(1) without generating the others. Monte Carlo
/// code keys one stream per trial index, which makes aggregate results
/// independent of how trials are scheduled across workers.
///
/// Draw order inside a stream is fixed by the call sequence. Normals come
/// from Box-Muller (no rejection), so the number of raw words consumed per
/// call never depends on the values drawn.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53 random bits.
  double next_double();

  /// Pair of independent standard normals.
  void next_normal_pair(double& z0, double& z1);

  /// Single standard normal; the second half of each Box-Muller pair is
  /// cached, so consecutive calls consume one pair per two values.
  double next_normal();

  /// Uniform on {0, ..., bound-1} via the multiply-shift map of one 64-bit
  /// draw; bias is below 2^-64 per call, far under Monte Carlo resolution.
  std::uint64_t next_index(std::uint64_t bound);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// One raw Philox 4x32-10 block; exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(
      const std::array<std::uint32_t, 4>& counter,
      const std::array<std::uint32_t, 2>& key);

 private:
  void refill();

  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;  // words consumed from buf_
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

/// SplitMix64 finalizer; full 64-bit avalanche.
std::uint64_t mix64(std::uint64_t x);

/// Derives a substream seed from a master seed and two context words
/// (e.g. grid-point index and quantity class).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

}  // namespace curvecomm

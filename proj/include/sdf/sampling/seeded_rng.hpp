#pragma once

#include <cstdint>
#include <limits>

#include "sdf/sampling/philox.hpp"

namespace sdf::sampling {

/// Reproducible generator built on Philox4x32-10.
///
/// The 64-bit seed is the Philox key. The 128-bit counter is split into a
/// 64-bit block index (words 0-1) and a 64-bit stream id (words 2-3), so
/// every (seed, stream) pair addresses its own 2^64-block sequence and no
/// state is shared between streams. Output word order within a block is
/// fixed, making sequences identical across platforms.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  /// Child stream for replicate `replicate` of experiment `experiment`.
  static SeededRng stream(std::uint64_t seed, std::uint32_t experiment, std::uint32_t replicate) {
    return SeededRng(seed, (std::uint64_t{experiment} << 32) | replicate);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    const std::uint64_t hi = next_word();
    const std::uint64_t lo = next_word();
    return (hi << 32) | lo;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

 private:
  std::uint32_t next_word() {
    if (used_ == 4) {
      const Philox4x32::Counter ctr = {
          static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
          static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
      const Philox4x32::Key key = {static_cast<std::uint32_t>(seed_),
                                   static_cast<std::uint32_t>(seed_ >> 32)};
      buffer_ = Philox4x32::apply(ctr, key);
      ++block_;
      used_ = 0;
    }
    return buffer_[used_++];
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace sdf::sampling

#pragma once

#include <cstdint>
#include <limits>

namespace rotkit {

/// Counter-based random stream keyed by (seed, stream index).
///
/// Draw n of stream (s, i) depends only on (s, i, n), so per-record streams
/// give identical results regardless of processing order or thread count.
/// Satisfies UniformRandomBitGenerator; the uniform()/normal() helpers are
/// preferred over <random> distributions because their output is specified
/// here rather than by the standard library vendor.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform in [lo, hi]; returns lo exactly when lo == hi.
  double uniform(double lo, double hi) noexcept;
  /// Standard normal via Box-Muller.
  double normal() noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rotkit

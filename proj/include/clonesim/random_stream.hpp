#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace clonesim {

/// Seeded source of standard normals. Each stream is keyed by (master seed,
/// stream index) so Monte Carlo blocks can be generated independently and in
/// any order while staying bit-reproducible.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open() noexcept;

  /// Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace clonesim

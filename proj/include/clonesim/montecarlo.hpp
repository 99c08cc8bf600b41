#pragma once

#include <cstddef>
#include <cstdint>

#include "clonesim/cloner.hpp"
#include "clonesim/phase_space.hpp"

namespace clonesim {

// Shots are split into fixed-size contiguous blocks; block b draws from
// RandomStream(seed, b). Shards only decide which thread runs which blocks,
// and block partials are merged in block order, so estimates do not depend
// on the shard count.
inline constexpr std::size_t kShotsPerBlock = 8192;
inline constexpr std::size_t kMinSamples = 1000;

struct FidelityEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  CloningConfig config;
  Amplitude target;
};

struct MomentEstimate {
  Amplitude mean_amplitude;
  /// Standard error of the mean, sqrt(complex_variance / samples).
  double mean_std_error = 0.0;
  /// Unbiased E|beta - mean|^2.
  double complex_variance = 0.0;
  double variance_std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Average of exp(-|alpha - clone|^2) over trajectories.
FidelityEstimate estimate_fidelity(const CloningConfig& config, Amplitude alpha,
                                   std::size_t samples, std::uint64_t seed,
                                   std::size_t shards = 1);

MomentEstimate estimate_clone_moments(const CloningConfig& config, Amplitude alpha,
                                      std::size_t samples, std::uint64_t seed,
                                      std::size_t shards = 1);

}  // namespace clonesim

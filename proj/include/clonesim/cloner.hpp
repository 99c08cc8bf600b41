#pragma once

#include <optional>

#include "clonesim/linear_optics.hpp"
#include "clonesim/measurement.hpp"
#include "clonesim/phase_space.hpp"
#include "clonesim/random_stream.hpp"

namespace clonesim {

/// Full parameterization of an n -> m machine. transmissivity == 1 marks the
/// pass-through machine and is only valid when n == m.
struct CloningConfig {
  int n = 1;
  int m = 2;
  double efficiency = 1.0;
  double transmissivity = 0.5;
  double gain = 1.0;

  bool pass_through() const noexcept { return transmissivity == 1.0; }
};

void validate(const CloningConfig& config);

/// Gain that cancels the amplitude dependence of the clone fidelity:
/// (sqrt(m) - sqrt(n t)) / sqrt(n (1 - t)).
double universal_gain(int n, int m, double transmissivity);

/// n/m
double optimal_transmissivity(int n, int m);

/// Builds a validated config. Missing tau defaults to n/m, missing gain to the
/// universal gain for the chosen tau. With n == m and no overrides the result
/// is the pass-through machine.
CloningConfig make_config(int n, int m, double efficiency,
                          std::optional<double> transmissivity = std::nullopt,
                          std::optional<double> gain = std::nullopt);

struct ShotResult {
  Amplitude outcome;
  ModeRegister clones;
};

/// Precomputed deterministic part of the circuit for one (config, alpha):
/// combining network, tap splitter, and the means seen by each arm.
class ClonerPipeline {
 public:
  ClonerPipeline(const CloningConfig& config, Amplitude alpha);

  const CloningConfig& config() const noexcept { return config_; }
  Amplitude combined() const noexcept { return combined_; }
  Amplitude transmitted() const noexcept { return transmitted_; }
  Amplitude detector_mean() const noexcept { return detector_mean_; }

  /// Clone amplitude for a given dual-homodyne outcome.
  Amplitude clone_amplitude(Amplitude outcome) const noexcept;

  /// Draws one outcome; the pass-through machine consumes no randomness.
  Amplitude sample_clone_amplitude(RandomStream& rng) const noexcept;

  ShotResult shot(RandomStream& rng) const;

 private:
  CloningConfig config_;
  Amplitude alpha_;
  DualHomodyne detector_;
  Amplitude combined_;
  Amplitude transmitted_;
  Amplitude detector_mean_;
  double inv_sqrt_m_;
};

ShotResult clone_shot(const CloningConfig& config, Amplitude alpha, RandomStream& rng);

/// Mixture over outcomes reduced to a single clone: mean
/// (sqrt(n t) + g sqrt(n (1 - t))) alpha / sqrt(m), added noise g^2 / (m eta).
GaussianClone clone_ensemble(const CloningConfig& config, Amplitude alpha);

}  // namespace clonesim

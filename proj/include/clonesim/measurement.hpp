#pragma once

#include "clonesim/phase_space.hpp"
#include "clonesim/random_stream.hpp"

namespace clonesim {

/// Dual-homodyne (eight-port) detection with equal efficiency eta on both
/// homodyne arms. For a coherent input |mu> the outcome z has density
/// (eta/pi) exp(-eta |z - mu|^2).
class DualHomodyne {
 public:
  explicit DualHomodyne(double efficiency);

  double efficiency() const noexcept { return efficiency_; }
  /// (1 - eta)/eta
  double excess_noise() const noexcept { return excess_noise_; }
  /// 1/(2 eta)
  double quadrature_variance() const noexcept { return 0.5 / efficiency_; }

  double outcome_density(Amplitude input_mean, Amplitude z) const noexcept;

  Amplitude sample_outcome(Amplitude input_mean, RandomStream& rng) const noexcept;

 private:
  double efficiency_;
  double excess_noise_;
  double quadrature_sigma_;
};

void validate_efficiency(double efficiency);

}  // namespace clonesim

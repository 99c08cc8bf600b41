#include "clonesim/measurement.hpp"

#include <cmath>
#include <numbers>

#include "clonesim/error.hpp"

namespace clonesim {

void validate_efficiency(double efficiency) {
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw ParameterError("efficiency must lie in (0,1]");
  }
}

namespace {
double checked_efficiency(double efficiency) {
  validate_efficiency(efficiency);
  return efficiency;
}
}  // namespace

DualHomodyne::DualHomodyne(double efficiency)
    : efficiency_(checked_efficiency(efficiency)),
      excess_noise_((1.0 - efficiency) / efficiency),
      quadrature_sigma_(std::sqrt(0.5 / efficiency)) {}

double DualHomodyne::outcome_density(Amplitude input_mean, Amplitude z) const noexcept {
  return efficiency_ / std::numbers::pi * std::exp(-efficiency_ * std::norm(z - input_mean));
}

Amplitude DualHomodyne::sample_outcome(Amplitude input_mean, RandomStream& rng) const noexcept {
  const auto [x, y] = rng.normal_pair();
  return input_mean + Amplitude(quadrature_sigma_ * x, quadrature_sigma_ * y);
}

}  // namespace clonesim

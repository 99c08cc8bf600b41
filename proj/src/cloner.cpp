#include "clonesim/cloner.hpp"

#include <cmath>
#include <string>

#include "clonesim/error.hpp"

namespace clonesim {

namespace {

void validate_copies(int n, int m) {
  if (n < 1) throw ParameterError("input copies n must be >= 1");
  if (m < n) throw ParameterError("output clones m must be >= n");
}

Amplitude combine_copies(int n, Amplitude alpha) {
  if (n == 1) return alpha;
  const auto inputs = ModeRegister::uniform(static_cast<std::size_t>(n), alpha);
  const auto result = is_power_of_two(inputs.size()) ? balanced_tree_combine(inputs)
                                                     : cascade_combine(inputs);
  return result.combined();
}

}  // namespace

void validate(const CloningConfig& config) {
  validate_copies(config.n, config.m);
  validate_efficiency(config.efficiency);
  const double tau = config.transmissivity;
  if (config.pass_through()) {
    if (config.n != config.m) {
      throw ParameterError("transmissivity 1 (pass-through) requires n == m");
    }
  } else if (!(tau >= 0.0 && tau < 1.0)) {
    throw ParameterError("transmissivity must lie in [0,1)");
  }
  if (!(std::isfinite(config.gain) && config.gain >= 0.0)) {
    throw ParameterError("gain must be finite and >= 0");
  }
}

double universal_gain(int n, int m, double transmissivity) {
  validate_copies(n, m);
  if (transmissivity == 1.0) {
    throw SingularityError("universal gain is singular at transmissivity 1");
  }
  if (!(transmissivity >= 0.0 && transmissivity < 1.0)) {
    throw ParameterError("transmissivity must lie in [0,1)");
  }
  const double nd = n;
  const double md = m;
  // Only reachable for m < n t, which the range checks above already exclude.
  if (transmissivity > md / nd) throw ParameterError("transmissivity must not exceed m/n");
  return (std::sqrt(md) - std::sqrt(nd * transmissivity)) / std::sqrt(nd * (1.0 - transmissivity));
}

double optimal_transmissivity(int n, int m) {
  validate_copies(n, m);
  return static_cast<double>(n) / static_cast<double>(m);
}

CloningConfig make_config(int n, int m, double efficiency, std::optional<double> transmissivity,
                          std::optional<double> gain) {
  validate_copies(n, m);
  validate_efficiency(efficiency);
  CloningConfig config{n, m, efficiency, 1.0, 0.0};
  if (n == m && !transmissivity && !gain) {
    return config;
  }
  const double tau = transmissivity.value_or(optimal_transmissivity(n, m));
  if (tau == 1.0) {
    throw ParameterError(n == m ? "pass-through machine (transmissivity 1) takes no gain"
                                : "transmissivity 1 requires n == m");
  }
  config.transmissivity = tau;
  config.gain = gain ? *gain : universal_gain(n, m, tau);
  validate(config);
  return config;
}

ClonerPipeline::ClonerPipeline(const CloningConfig& config, Amplitude alpha)
    : config_(config), alpha_(alpha), detector_(config.efficiency) {
  validate(config);
  require_finite(alpha, "input amplitude");
  if (config.pass_through()) {
    combined_ = transmitted_ = alpha;
    detector_mean_ = Amplitude{};
    return;
  }
  combined_ = combine_copies(config.n, alpha);
  // Signal enters the second port so the reflected (detector) arm carries
  // +sqrt(1-t) and the transmitted arm +sqrt(t) of the combined amplitude.
  const auto [reflected, transmitted] =
      BeamSplitter(config.transmissivity).apply(Amplitude{}, combined_);
  detector_mean_ = reflected;
  transmitted_ = transmitted;
}

Amplitude ClonerPipeline::clone_amplitude(Amplitude outcome) const noexcept {
  if (config_.pass_through()) return alpha_;
  return multi_splitter_port_amplitude(config_.m, displace(transmitted_, config_.gain * outcome));
}

Amplitude ClonerPipeline::sample_clone_amplitude(RandomStream& rng) const noexcept {
  if (config_.pass_through()) return alpha_;
  return clone_amplitude(detector_.sample_outcome(detector_mean_, rng));
}

ShotResult ClonerPipeline::shot(RandomStream& rng) const {
  if (config_.pass_through()) {
    return ShotResult{Amplitude{}, ModeRegister::uniform(static_cast<std::size_t>(config_.m), alpha_)};
  }
  const Amplitude z = detector_.sample_outcome(detector_mean_, rng);
  return ShotResult{z, multi_splitter_apply(config_.m, displace(transmitted_, config_.gain * z))};
}

ShotResult clone_shot(const CloningConfig& config, Amplitude alpha, RandomStream& rng) {
  return ClonerPipeline(config, alpha).shot(rng);
}

GaussianClone clone_ensemble(const CloningConfig& config, Amplitude alpha) {
  validate(config);
  require_finite(alpha, "input amplitude");
  if (config.pass_through()) return GaussianClone{alpha, 0.0};
  const double n = config.n;
  const double m = config.m;
  const double tau = config.transmissivity;
  const double g = config.gain;
  const double scale = (std::sqrt(n * tau) + g * std::sqrt(n * (1.0 - tau))) / std::sqrt(m);
  return GaussianClone{scale * alpha, g * g / (m * config.efficiency)};
}

}  // namespace clonesim

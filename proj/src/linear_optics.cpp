#include "clonesim/linear_optics.hpp"

#include <cmath>
#include <string>

#include "clonesim/error.hpp"

namespace clonesim {

namespace {

void require_nonempty(const ModeRegister& inputs) {
  if (inputs.size() == 0) throw ParameterError("mode register must hold at least one mode");
}

bool all_equal(const ModeRegister& inputs) {
  const Amplitude first = inputs[0];
  for (Amplitude a : inputs.amplitudes()) {
    if (std::abs(a.real() - first.real()) > kEqualInputTolerance ||
        std::abs(a.imag() - first.imag()) > kEqualInputTolerance) {
      return false;
    }
  }
  return true;
}

double ancilla_energy(const ModeRegister& modes) {
  double e = 0.0;
  for (std::size_t i = 1; i < modes.size(); ++i) e += std::norm(modes[i]);
  return e;
}

CombineResult finish(ModeRegister modes, std::vector<double> schedule, bool inputs_equal,
                     CombinePolicy policy, const char* scheme) {
  const double residual = ancilla_energy(modes);
  if (!inputs_equal && policy == CombinePolicy::kStrict) {
    throw CombineError(std::string(scheme) + ": inputs are not equal copies; residual ancilla energy " +
                           std::to_string(residual),
                       residual);
  }
  return CombineResult{std::move(modes), std::move(schedule), residual, inputs_equal};
}

}  // namespace

BeamSplitter::BeamSplitter(double transmissivity) : transmissivity_(transmissivity) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw ParameterError("transmissivity must lie in [0,1]");
  }
  t_amp_ = std::sqrt(transmissivity);
  r_amp_ = std::sqrt(1.0 - transmissivity);
}

std::pair<Amplitude, Amplitude> BeamSplitter::apply(Amplitude a, Amplitude b) const noexcept {
  return {t_amp_ * a + r_amp_ * b, -r_amp_ * a + t_amp_ * b};
}

std::pair<Amplitude, Amplitude> beam_splitter_apply(double transmissivity, Amplitude a,
                                                    Amplitude b) {
  return BeamSplitter(transmissivity).apply(a, b);
}

ModeRegister::ModeRegister(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw ParameterError("mode register must hold at least one mode");
  for (Amplitude a : amplitudes_) require_finite(a, "mode amplitude");
}

ModeRegister::ModeRegister(std::initializer_list<Amplitude> amplitudes)
    : ModeRegister(std::vector<Amplitude>(amplitudes)) {}

ModeRegister ModeRegister::uniform(std::size_t count, Amplitude value) {
  return ModeRegister(std::vector<Amplitude>(count, value));
}

double ModeRegister::energy() const noexcept {
  double e = 0.0;
  for (Amplitude a : amplitudes_) e += std::norm(a);
  return e;
}

ModeRegister multi_splitter_apply(int ports, Amplitude beta) {
  if (ports < 1) throw ParameterError("multi-splitter port count must be >= 1");
  require_finite(beta, "multi-splitter input");
  return ModeRegister::uniform(static_cast<std::size_t>(ports),
                               multi_splitter_port_amplitude(ports, beta));
}

Amplitude multi_splitter_port_amplitude(int ports, Amplitude beta) noexcept {
  return ports == 1 ? beta : beta / std::sqrt(static_cast<double>(ports));
}

CombineResult cascade_combine(const ModeRegister& inputs, CombinePolicy policy) {
  require_nonempty(inputs);
  const bool equal = all_equal(inputs);
  ModeRegister modes = inputs;
  std::vector<double> schedule;
  schedule.reserve(inputs.size() - 1);
  for (std::size_t k = 1; k < inputs.size(); ++k) {
    const double tau = 1.0 / (1.0 + static_cast<double>(k));
    // Fresh copy enters the first port, the accumulated beam the second.
    const auto [merged, ancilla] = BeamSplitter(tau).apply(modes[k], modes[0]);
    modes[0] = merged;
    modes[k] = ancilla;
    schedule.push_back(tau);
  }
  return finish(std::move(modes), std::move(schedule), equal, policy, "cascade_combine");
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

CombineResult balanced_tree_combine(const ModeRegister& inputs, CombinePolicy policy) {
  require_nonempty(inputs);
  if (!is_power_of_two(inputs.size())) {
    throw ParameterError("balanced tree requires a power-of-two number of inputs, got " +
                         std::to_string(inputs.size()));
  }
  const bool equal = all_equal(inputs);
  ModeRegister modes = inputs;
  std::vector<double> schedule;
  schedule.reserve(inputs.size() - 1);
  const BeamSplitter balanced(0.5);
  for (std::size_t stride = 1; stride < inputs.size(); stride *= 2) {
    for (std::size_t i = 0; i + stride < inputs.size(); i += 2 * stride) {
      const auto [merged, ancilla] = balanced.apply(modes[i], modes[i + stride]);
      modes[i] = merged;
      modes[i + stride] = ancilla;
      schedule.push_back(0.5);
    }
  }
  return finish(std::move(modes), std::move(schedule), equal, policy, "balanced_tree_combine");
}

}  // namespace clonesim

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "clonesim/phase_space.hpp"

namespace clonesim {

/// Lossless two-port beam splitter acting on coherent amplitudes with the real
/// orthogonal matrix [[sqrt(t), sqrt(1-t)], [-sqrt(1-t), sqrt(t)]].
class BeamSplitter {
 public:
  explicit BeamSplitter(double transmissivity);

  double transmissivity() const noexcept { return transmissivity_; }

  std::pair<Amplitude, Amplitude> apply(Amplitude a, Amplitude b) const noexcept;

 private:
  double transmissivity_;
  double t_amp_;
  double r_amp_;
};

std::pair<Amplitude, Amplitude> beam_splitter_apply(double transmissivity, Amplitude a,
                                                    Amplitude b);

/// Ordered coherent amplitudes, one per optical mode. Never empty.
class ModeRegister {
 public:
  explicit ModeRegister(std::vector<Amplitude> amplitudes);
  ModeRegister(std::initializer_list<Amplitude> amplitudes);

  /// `count` copies of `value`.
  static ModeRegister uniform(std::size_t count, Amplitude value);

  std::size_t size() const noexcept { return amplitudes_.size(); }
  Amplitude operator[](std::size_t i) const { return amplitudes_[i]; }
  Amplitude& operator[](std::size_t i) { return amplitudes_[i]; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  /// Sum of |amplitude|^2 over all modes (mean photon number).
  double energy() const noexcept;

 private:
  std::vector<Amplitude> amplitudes_;
};

/// Action of the m-port multi-splitter on |beta> (x) |0>^(m-1): beta/sqrt(m) in every port.
/// Only this input slice is defined.
ModeRegister multi_splitter_apply(int ports, Amplitude beta);

/// The amplitude multi_splitter_apply places in each port.
Amplitude multi_splitter_port_amplitude(int ports, Amplitude beta) noexcept;

enum class CombinePolicy {
  kStrict,      // unequal inputs throw CombineError
  kPermissive,  // unequal inputs are propagated and flagged
};

struct CombineResult {
  /// Output modes; the combined amplitude is modes[0], the rest are ancillas.
  ModeRegister modes;
  /// Transmissivity of each beam splitter in the order applied.
  std::vector<double> schedule;
  /// Sum of |amplitude|^2 left in the ancilla ports.
  double residual_energy = 0.0;
  /// Inputs agreed within kEqualInputTolerance per component.
  bool inputs_equal = true;

  Amplitude combined() const { return modes[0]; }
  std::size_t beam_splitters() const noexcept { return schedule.size(); }
};

inline constexpr double kEqualInputTolerance = 1e-9;

/// Sequential cascade: step k = 1..n-1 merges fresh copy k+1 with the
/// accumulated sqrt(k) alpha using transmissivity 1/(1+k).
CombineResult cascade_combine(const ModeRegister& inputs,
                              CombinePolicy policy = CombinePolicy::kStrict);

/// Balanced-splitter binary tree over 2^k inputs using 2^k - 1 splitters.
CombineResult balanced_tree_combine(const ModeRegister& inputs,
                                    CombinePolicy policy = CombinePolicy::kStrict);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace clonesim

#pragma once

#include <vector>

#include "clonesim/phase_space.hpp"

namespace clonesim {

/// Single-clone fidelity of the n -> m machine for arbitrary (t, g):
/// (m eta / (g^2 + m eta)) exp(-eta [g sqrt(n(1-t)) + sqrt(n t) - sqrt(m)]^2 |alpha|^2 / (g^2 + m eta)).
double fidelity_general(Amplitude alpha, int n, int m, double transmissivity, double gain,
                        double efficiency);

/// Fidelity with the universal gain at transmissivity t. n == 1 uses the
/// closed form m eta (1-t) / ((sqrt(m) - sqrt(t))^2 + m eta (1-t)); other n
/// substitute the universal gain into fidelity_general. t == 1 is accepted
/// only for n == m and returns 1.
double fidelity_universal(int n, int m, double transmissivity, double efficiency);

/// Always the substitution route; kept separate so the n == 1 closed form can
/// be checked against it.
double fidelity_universal_by_substitution(int n, int m, double transmissivity,
                                          double efficiency);

/// m n eta / (m n eta + m - n), reached at t = n/m.
double fidelity_max(int n, int m, double efficiency);

/// m n / (m n + m - n)
double fidelity_optimal(int n, int m);

struct SweepRow {
  int n;
  int m;
  double efficiency;
  double transmissivity;
  double gain;
  double fidelity;
};

using SweepTable = std::vector<SweepRow>;

struct IntRange {
  int first;
  int last;  // inclusive
};

/// One row per (n, m >= n, eta) at the optimal transmissivity and universal
/// gain, sorted by (eta, n, m) ascending.
SweepTable sweep_fig4(IntRange n_range, IntRange m_range, const std::vector<double>& efficiencies);

/// Grid maximizer of fidelity_universal over t_i = i / grid_size, i = 1..grid_size-1.
double argmax_transmissivity_numeric(int n, int m, double efficiency, int grid_size);

}  // namespace clonesim

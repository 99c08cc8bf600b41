#pragma once

#include <complex>

namespace clonesim {

// Coherent amplitudes use the convention x = (a + a^dag)/sqrt(2), y = (a - a^dag)/(i sqrt(2)),
// so |alpha> has quadrature means (sqrt(2) Re alpha, sqrt(2) Im alpha) and variance 1/2 each.
// Measurement outcomes z = x + iy are carried in the same type.
using Amplitude = std::complex<double>;

bool is_finite(Amplitude a) noexcept;

/// Throws ParameterError naming `what` if `a` has a NaN or infinite component.
void require_finite(Amplitude a, const char* what);

/// Reduced single-clone state: a displaced thermal state with coherent mean
/// `mean` and `added_noise` thermal photons (complex-amplitude variance of the
/// classical displacement noise). added_noise == 0 is a pure coherent state.
struct GaussianClone {
  Amplitude mean;
  double added_noise = 0.0;
};

/// |<a|b>|^2 = exp(-|a - b|^2).
double coherent_overlap_fidelity(Amplitude a, Amplitude b) noexcept;

/// <target| rho |target> for a displaced thermal rho:
/// exp(-|mean - target|^2 / (1 + nbar)) / (1 + nbar).
double gaussian_clone_fidelity(const GaussianClone& clone, Amplitude target);

inline Amplitude displace(Amplitude state, Amplitude delta) noexcept { return state + delta; }

}  // namespace clonesim

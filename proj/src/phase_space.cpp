#include "clonesim/phase_space.hpp"

#include <cmath>
#include <string>

#include "clonesim/error.hpp"

namespace clonesim {

bool is_finite(Amplitude a) noexcept { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

void require_finite(Amplitude a, const char* what) {
  if (!is_finite(a)) {
    throw ParameterError(std::string(what) + " must be a finite complex amplitude");
  }
}

double coherent_overlap_fidelity(Amplitude a, Amplitude b) noexcept {
  return std::exp(-std::norm(a - b));
}

double gaussian_clone_fidelity(const GaussianClone& clone, Amplitude target) {
  if (!(clone.added_noise >= 0.0) || !std::isfinite(clone.added_noise)) {
    throw ParameterError("added_noise must be finite and >= 0");
  }
  const double spread = 1.0 + clone.added_noise;
  return std::exp(-std::norm(clone.mean - target) / spread) / spread;
}

}  // namespace clonesim

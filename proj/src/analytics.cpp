#include "clonesim/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "clonesim/cloner.hpp"
#include "clonesim/error.hpp"
#include "clonesim/measurement.hpp"

namespace clonesim {

namespace {

void validate_copies(int n, int m) {
  if (n < 1) throw ParameterError("input copies n must be >= 1");
  if (m < n) throw ParameterError("output clones m must be >= n");
}

void validate_universal_args(int n, int m, double transmissivity, double efficiency) {
  validate_copies(n, m);
  validate_efficiency(efficiency);
  if (transmissivity == 1.0) {
    if (n != m) throw SingularityError("universal gain is singular at transmissivity 1 for n < m");
    return;
  }
  if (!(transmissivity >= 0.0 && transmissivity < 1.0)) {
    throw ParameterError("transmissivity must lie in [0,1]");
  }
}

}  // namespace

double fidelity_general(Amplitude alpha, int n, int m, double transmissivity, double gain,
                        double efficiency) {
  if (n < 1) throw ParameterError("input copies n must be >= 1");
  if (m < 1) throw ParameterError("output clones m must be >= 1");
  validate_efficiency(efficiency);
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw ParameterError("transmissivity must lie in [0,1]");
  }
  if (!(std::isfinite(gain) && gain >= 0.0)) throw ParameterError("gain must be finite and >= 0");
  require_finite(alpha, "input amplitude");

  const double nd = n;
  const double md = m;
  const double denom = gain * gain + md * efficiency;
  const double bias =
      gain * std::sqrt(nd * (1.0 - transmissivity)) + std::sqrt(nd * transmissivity) - std::sqrt(md);
  return md * efficiency / denom * std::exp(-efficiency * bias * bias * std::norm(alpha) / denom);
}

double fidelity_universal_by_substitution(int n, int m, double transmissivity, double efficiency) {
  validate_universal_args(n, m, transmissivity, efficiency);
  if (transmissivity == 1.0) return 1.0;
  const double g = universal_gain(n, m, transmissivity);
  // The exponent vanishes for the universal gain, so any alpha gives the same value.
  return fidelity_general(Amplitude{}, n, m, transmissivity, g, efficiency);
}

double fidelity_universal(int n, int m, double transmissivity, double efficiency) {
  validate_universal_args(n, m, transmissivity, efficiency);
  if (transmissivity == 1.0) return 1.0;
  if (n != 1) return fidelity_universal_by_substitution(n, m, transmissivity, efficiency);
  const double md = m;
  const double gap = std::sqrt(md) - std::sqrt(transmissivity);
  const double signal = md * efficiency * (1.0 - transmissivity);
  return signal / (gap * gap + signal);
}

double fidelity_max(int n, int m, double efficiency) {
  validate_copies(n, m);
  validate_efficiency(efficiency);
  const double mn_eta = static_cast<double>(m) * n * efficiency;
  return mn_eta / (mn_eta + (m - n));
}

double fidelity_optimal(int n, int m) {
  validate_copies(n, m);
  const double mn = static_cast<double>(m) * n;
  return mn / (mn + (m - n));
}

SweepTable sweep_fig4(IntRange n_range, IntRange m_range, const std::vector<double>& efficiencies) {
  if (efficiencies.empty()) throw ParameterError("efficiency list must not be empty");
  if (n_range.first < 1 || n_range.last < n_range.first) {
    throw ParameterError("n range must be non-empty with n >= 1");
  }
  if (m_range.last < m_range.first) throw ParameterError("m range must be non-empty");
  for (double eta : efficiencies) validate_efficiency(eta);

  std::vector<double> etas = efficiencies;
  std::sort(etas.begin(), etas.end());
  etas.erase(std::unique(etas.begin(), etas.end()), etas.end());

  SweepTable table;
  for (double eta : etas) {
    for (int n = n_range.first; n <= n_range.last; ++n) {
      for (int m = std::max(n, m_range.first); m <= m_range.last; ++m) {
        const auto config = make_config(n, m, eta);
        table.push_back(SweepRow{n, m, eta, config.transmissivity, config.gain, fidelity_max(n, m, eta)});
      }
    }
  }
  if (table.empty()) throw ParameterError("ranges contain no (n, m) pair with m >= n");
  return table;
}

double argmax_transmissivity_numeric(int n, int m, double efficiency, int grid_size) {
  validate_copies(n, m);
  validate_efficiency(efficiency);
  if (grid_size < 101) throw ParameterError("grid_size must be >= 101");
  double best_tau = 0.0;
  double best_fidelity = -1.0;
  for (int i = 1; i < grid_size; ++i) {
    const double tau = static_cast<double>(i) / grid_size;
    const double f = fidelity_universal(n, m, tau, efficiency);
    if (f > best_fidelity) {
      best_fidelity = f;
      best_tau = tau;
    }
  }
  return best_tau;
}

}  // namespace clonesim

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clonesim/analytics.hpp"
#include "clonesim/cli.hpp"
#include "clonesim/cloner.hpp"
#include "clonesim/error.hpp"
#include "clonesim/linear_optics.hpp"
#include "clonesim/measurement.hpp"
#include "clonesim/montecarlo.hpp"
#include "clonesim/phase_space.hpp"

namespace py = pybind11;
using namespace clonesim;

namespace {

std::vector<Amplitude> to_vector(const ModeRegister& r) { return {r.amplitudes().begin(), r.amplitudes().end()}; }

}  // namespace

PYBIND11_MODULE(_clonesim, m) {
  m.doc() = "Gaussian n->m coherent-state cloning: closed forms and Monte Carlo";

  auto param_error = py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<CombineError>(m, "CombineError", PyExc_RuntimeError);
  (void)param_error;

  py::class_<GaussianClone>(m, "GaussianClone")
      .def(py::init<Amplitude, double>(), py::arg("mean"), py::arg("added_noise") = 0.0)
      .def_readwrite("mean", &GaussianClone::mean)
      .def_readwrite("added_noise", &GaussianClone::added_noise);

  m.def("coherent_overlap_fidelity", &coherent_overlap_fidelity, py::arg("a"), py::arg("b"));
  m.def("gaussian_clone_fidelity", &gaussian_clone_fidelity, py::arg("clone"), py::arg("target"));
  m.def("displace", &displace, py::arg("state"), py::arg("delta"));

  m.def("beam_splitter_apply", &beam_splitter_apply, py::arg("tau"), py::arg("a"), py::arg("b"));
  m.def("multi_splitter_apply",
        [](int ports, Amplitude beta) { return to_vector(multi_splitter_apply(ports, beta)); },
        py::arg("m"), py::arg("beta"));

  py::class_<CombineResult>(m, "CombineResult")
      .def_property_readonly("modes", [](const CombineResult& r) { return to_vector(r.modes); })
      .def_property_readonly("combined", &CombineResult::combined)
      .def_property_readonly("beam_splitters", &CombineResult::beam_splitters)
      .def_readonly("schedule", &CombineResult::schedule)
      .def_readonly("residual_energy", &CombineResult::residual_energy)
      .def_readonly("inputs_equal", &CombineResult::inputs_equal);
  m.def("cascade_combine",
        [](const std::vector<Amplitude>& inputs) { return cascade_combine(ModeRegister(inputs)); },
        py::arg("inputs"));
  m.def("balanced_tree_combine",
        [](const std::vector<Amplitude>& inputs) { return balanced_tree_combine(ModeRegister(inputs)); },
        py::arg("inputs"));

  m.def("outcome_density",
        [](double eta, Amplitude mean, Amplitude z) { return DualHomodyne(eta).outcome_density(mean, z); },
        py::arg("eta"), py::arg("input_mean"), py::arg("z"));

  py::class_<CloningConfig>(m, "CloningConfig")
      .def_readonly("n", &CloningConfig::n)
      .def_readonly("m", &CloningConfig::m)
      .def_readonly("efficiency", &CloningConfig::efficiency)
      .def_readonly("transmissivity", &CloningConfig::transmissivity)
      .def_readonly("gain", &CloningConfig::gain)
      .def_property_readonly("pass_through", &CloningConfig::pass_through)
      .def("__repr__", [](const CloningConfig& c) {
        std::ostringstream os;
        os << "CloningConfig(n=" << c.n << ", m=" << c.m << ", efficiency=" << c.efficiency
           << ", transmissivity=" << c.transmissivity << ", gain=" << c.gain << ")";
        return os.str();
      });

  m.def("universal_gain", &universal_gain, py::arg("n"), py::arg("m"), py::arg("tau"));
  m.def("optimal_transmissivity", &optimal_transmissivity, py::arg("n"), py::arg("m"));
  m.def("make_config", &make_config, py::arg("n"), py::arg("m"), py::arg("eta"),
        py::arg("tau") = py::none(), py::arg("g") = py::none());
  m.def("clone_ensemble", &clone_ensemble, py::arg("config"), py::arg("alpha"));
  m.def("clone_shot",
        [](const CloningConfig& config, Amplitude alpha, std::uint64_t seed, std::uint64_t stream) {
          RandomStream rng(seed, stream);
          auto shot = clone_shot(config, alpha, rng);
          return py::make_tuple(shot.outcome, to_vector(shot.clones));
        },
        py::arg("config"), py::arg("alpha"), py::arg("seed"), py::arg("stream") = 0,
        "One trajectory drawn from RandomStream(seed, stream); returns (outcome, clones).");

  m.def("fidelity_general", &fidelity_general, py::arg("alpha"), py::arg("n"), py::arg("m"),
        py::arg("tau"), py::arg("g"), py::arg("eta"));
  m.def("fidelity_universal", &fidelity_universal, py::arg("n"), py::arg("m"), py::arg("tau"), py::arg("eta"));
  m.def("fidelity_max", &fidelity_max, py::arg("n"), py::arg("m"), py::arg("eta"));
  m.def("fidelity_optimal", &fidelity_optimal, py::arg("n"), py::arg("m"));
  m.def("argmax_transmissivity_numeric", &argmax_transmissivity_numeric, py::arg("n"), py::arg("m"),
        py::arg("eta"), py::arg("grid_size") = 10000);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("n", &SweepRow::n)
      .def_readonly("m", &SweepRow::m)
      .def_readonly("efficiency", &SweepRow::efficiency)
      .def_readonly("transmissivity", &SweepRow::transmissivity)
      .def_readonly("gain", &SweepRow::gain)
      .def_readonly("fidelity", &SweepRow::fidelity);
  m.def("sweep_fig4",
        [](std::pair<int, int> n_range, std::pair<int, int> m_range, const std::vector<double>& etas) {
          return sweep_fig4({n_range.first, n_range.second}, {m_range.first, m_range.second}, etas);
        },
        py::arg("n_range"), py::arg("m_range"), py::arg("etas"),
        "Inclusive (first, last) ranges; one row per (eta, n, m >= n).");

  py::class_<FidelityEstimate>(m, "FidelityEstimate")
      .def_readonly("mean", &FidelityEstimate::mean)
      .def_readonly("std_error", &FidelityEstimate::std_error)
      .def_readonly("samples", &FidelityEstimate::samples)
      .def_readonly("seed", &FidelityEstimate::seed)
      .def_readonly("config", &FidelityEstimate::config)
      .def_readonly("target", &FidelityEstimate::target);
  py::class_<MomentEstimate>(m, "MomentEstimate")
      .def_readonly("mean_amplitude", &MomentEstimate::mean_amplitude)
      .def_readonly("mean_std_error", &MomentEstimate::mean_std_error)
      .def_readonly("complex_variance", &MomentEstimate::complex_variance)
      .def_readonly("variance_std_error", &MomentEstimate::variance_std_error)
      .def_readonly("samples", &MomentEstimate::samples)
      .def_readonly("seed", &MomentEstimate::seed);

  m.def("estimate_fidelity", &estimate_fidelity, py::arg("config"), py::arg("alpha"), py::arg("samples"),
        py::arg("seed"), py::arg("shards") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("estimate_clone_moments", &estimate_clone_moments, py::arg("config"), py::arg("alpha"),
        py::arg("samples"), py::arg("seed"), py::arg("shards") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "clonesim");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a CLI invocation in-process; returns (exit_code, stdout, stderr).");
}

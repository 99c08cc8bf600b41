#include "clonesim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clonesim/amplitude_parse.hpp"
#include "clonesim/analytics.hpp"
#include "clonesim/cloner.hpp"
#include "clonesim/error.hpp"
#include "clonesim/linear_optics.hpp"
#include "clonesim/montecarlo.hpp"

namespace clonesim::cli {

namespace {

std::string value_text(const Value& v, int digits) {
  return std::visit(
      [digits](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(x, digits);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

nlohmann::json value_json(const Value& v, int digits) {
  return std::visit(
      [digits](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          // Round through the text form so JSON and CSV agree digit for digit.
          if (!std::isfinite(x)) return format_number(x, digits);
          return std::strtod(format_number(x, digits).c_str(), nullptr);
        } else {
          return x;
        }
      },
      v);
}

std::string render_csv(const OutputRecord& record, int digits) {
  std::string out;
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    if (c) out += ',';
    out += record.columns[c];
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += value_text(row[c], digits);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const OutputRecord& record, int digits) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = record.schema_version;
  doc["command"] = record.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.parameters) params[key] = value_json(value, digits);
  doc["parameters"] = params;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[record.columns[c]] = value_json(row[c], digits);
    results.push_back(obj);
  }
  doc["results"] = results;
  if (record.provenance) {
    doc["provenance"] = {{"seed", record.provenance->seed}, {"samples", record.provenance->samples}};
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const OutputRecord& record, int digits) {
  std::ostringstream os;
  os << "# clonesim " << record.command << " (schema " << record.schema_version << ")\n";
  for (const auto& [key, value] : record.parameters) os << key << " = " << value_text(value, digits) << '\n';
  if (record.provenance) {
    os << "seed = " << record.provenance->seed << '\n' << "samples = " << record.provenance->samples << '\n';
  }
  if (record.rows.size() == 1) {
    os << "--\n";
    for (std::size_t c = 0; c < record.columns.size(); ++c) {
      os << record.columns[c] << " = " << value_text(record.rows[0][c], digits) << '\n';
    }
    return os.str();
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back(record.columns);
  for (const auto& row : record.rows) {
    std::vector<std::string> line;
    for (const auto& v : row) line.push_back(value_text(v, digits));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(record.columns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  os << "--\n";
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << "  ";
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

// Options shared by every subcommand.
struct Common {
  std::string format = "text";
  std::string output;
  int digits = 12;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", common.output, "Write to this path instead of stdout");
  cmd->add_option("--digits", common.digits, "Significant digits for printed numbers")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return Format::kText;
}

struct MachineArgs {
  int n = 1;
  int m = 2;
  double eta = 1.0;
  std::optional<double> tau;
  std::optional<double> gain;
  std::string alpha = "1+0i";
};

void add_machine(CLI::App* cmd, MachineArgs& args, bool with_alpha) {
  cmd->add_option("--n", args.n, "Number of input copies")->required();
  cmd->add_option("--m", args.m, "Number of output clones")->required();
  cmd->add_option("--eta", args.eta, "Detector quantum efficiency in (0,1]")->required();
  cmd->add_option("--tau", args.tau, "Tap transmissivity (default n/m)");
  cmd->add_option("--g", args.gain, "Feed-forward gain (default: universal gain)");
  if (with_alpha) {
    cmd->add_option("--alpha", args.alpha, "Input amplitude, a+bi")->capture_default_str();
  }
}

void add_machine_parameters(OutputRecord& record, const MachineArgs& args) {
  record.parameters.emplace_back("n", std::int64_t{args.n});
  record.parameters.emplace_back("m", std::int64_t{args.m});
  record.parameters.emplace_back("eta", args.eta);
  if (args.tau) record.parameters.emplace_back("tau", *args.tau);
  if (args.gain) record.parameters.emplace_back("g", *args.gain);
}

bool is_universal(const CloningConfig& config) {
  if (config.pass_through()) return true;
  const double g = universal_gain(config.n, config.m, config.transmissivity);
  return std::abs(config.gain - g) <= 1e-12 * std::max(1.0, g);
}

OutputRecord cmd_fidelity(const MachineArgs& args) {
  const Amplitude alpha = parse_amplitude(args.alpha);
  const auto config = make_config(args.n, args.m, args.eta, args.tau, args.gain);
  OutputRecord record;
  record.command = "fidelity";
  add_machine_parameters(record, args);
  record.parameters.emplace_back("alpha", args.alpha);

  const bool universal = is_universal(config);
  const double f = config.pass_through()
                       ? 1.0
                       : fidelity_general(alpha, config.n, config.m, config.transmissivity,
                                          config.gain, config.efficiency);
  record.columns = {"n",        "m",           "eta",       "tau",
                    "g",        "universal",   "fidelity",  "fidelity_universal",
                    "fidelity_max", "pass_through"};
  record.rows.push_back({std::int64_t{config.n}, std::int64_t{config.m}, config.efficiency,
                         config.transmissivity, config.gain, universal, f,
                         fidelity_universal(config.n, config.m, config.transmissivity, config.efficiency),
                         fidelity_max(config.n, config.m, config.efficiency), config.pass_through()});
  return record;
}

struct SweepArgs {
  int n_max = 5;
  int m_max = 10;
  std::vector<double> etas;
};

OutputRecord cmd_sweep(const SweepArgs& args) {
  if (args.n_max < 1) throw ParameterError("n-max must be >= 1");
  if (args.m_max < args.n_max) throw ParameterError("m-max must be >= n-max");
  if (args.etas.empty()) throw ParameterError("efficiency list must not be empty");
  const auto table = sweep_fig4({1, args.n_max}, {1, args.m_max}, args.etas);
  OutputRecord record;
  record.command = "sweep";
  record.parameters.emplace_back("n_max", std::int64_t{args.n_max});
  record.parameters.emplace_back("m_max", std::int64_t{args.m_max});
  std::string eta_list;
  for (double eta : args.etas) {
    if (!eta_list.empty()) eta_list += ',';
    eta_list += format_number(eta, 15);
  }
  record.parameters.emplace_back("eta", eta_list);
  record.columns = {"n", "m", "eta", "tau", "g", "fidelity"};
  for (const auto& row : table) {
    record.rows.push_back({std::int64_t{row.n}, std::int64_t{row.m}, row.efficiency,
                           row.transmissivity, row.gain, row.fidelity});
  }
  return record;
}

struct SimulateArgs {
  MachineArgs machine;
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
  std::size_t shards = 1;
  bool strict = false;
};

double z_score(double estimate, double expected, double std_error) {
  const double diff = estimate - expected;
  if (std_error > 0.0) return diff / std_error;
  return std::abs(diff) <= 1e-12 ? 0.0 : std::copysign(HUGE_VAL, diff);
}

OutputRecord cmd_simulate(const SimulateArgs& args, bool& consistent) {
  const Amplitude alpha = parse_amplitude(args.machine.alpha);
  const auto& a = args.machine;
  const auto config = make_config(a.n, a.m, a.eta, a.tau, a.gain);
  const auto fid = estimate_fidelity(config, alpha, args.samples, args.seed, args.shards);
  const auto mom = estimate_clone_moments(config, alpha, args.samples, args.seed, args.shards);
  const auto ensemble = clone_ensemble(config, alpha);
  const double f_analytic = config.pass_through()
                                ? 1.0
                                : fidelity_general(alpha, config.n, config.m, config.transmissivity,
                                                   config.gain, config.efficiency);

  // The complex mean's error splits evenly over the two quadratures.
  const double quad_se = mom.mean_std_error / std::sqrt(2.0);
  const double z_re = z_score(mom.mean_amplitude.real(), ensemble.mean.real(), quad_se);
  const double z_im = z_score(mom.mean_amplitude.imag(), ensemble.mean.imag(), quad_se);
  const double z_mean = std::abs(z_re) >= std::abs(z_im) ? z_re : z_im;
  const double z_fid = z_score(fid.mean, f_analytic, fid.std_error);
  const double z_var = z_score(mom.complex_variance, ensemble.added_noise, mom.variance_std_error);
  consistent = std::abs(z_fid) <= kStrictZScore && std::abs(z_mean) <= kStrictZScore &&
               std::abs(z_var) <= kStrictZScore;

  OutputRecord record;
  record.command = "simulate";
  add_machine_parameters(record, a);
  record.parameters.emplace_back("alpha", a.alpha);
  record.parameters.emplace_back("shards", static_cast<std::int64_t>(args.shards));
  record.provenance = Provenance{args.seed, args.samples};
  record.columns = {"n",         "m",
                    "eta",       "tau",
                    "g",         "alpha_re",
                    "alpha_im",  "seed",
                    "samples",   "fidelity_mc",
                    "fidelity_std_error", "fidelity_analytic",
                    "fidelity_z", "mean_re",
                    "mean_im",   "mean_std_error",
                    "mean_analytic_re", "mean_analytic_im",
                    "mean_z",    "complex_variance",
                    "variance_std_error", "variance_analytic",
                    "variance_z"};
  record.rows.push_back({std::int64_t{config.n},
                         std::int64_t{config.m},
                         config.efficiency,
                         config.transmissivity,
                         config.gain,
                         alpha.real(),
                         alpha.imag(),
                         std::to_string(args.seed),
                         static_cast<std::int64_t>(args.samples),
                         fid.mean,
                         fid.std_error,
                         f_analytic,
                         z_fid,
                         mom.mean_amplitude.real(),
                         mom.mean_amplitude.imag(),
                         mom.mean_std_error,
                         ensemble.mean.real(),
                         ensemble.mean.imag(),
                         z_mean,
                         mom.complex_variance,
                         mom.variance_std_error,
                         ensemble.added_noise,
                         z_var});
  return record;
}

struct CascadeArgs {
  int n = 1;
  std::string alpha = "1+0i";
  std::string scheme = "sequential";
};

OutputRecord cmd_cascade(const CascadeArgs& args, int digits) {
  if (args.n < 1) throw ParameterError("n must be >= 1");
  const Amplitude alpha = parse_amplitude(args.alpha);
  const auto inputs = ModeRegister::uniform(static_cast<std::size_t>(args.n), alpha);
  const auto result = args.scheme == "tree" ? balanced_tree_combine(inputs) : cascade_combine(inputs);
  double max_ancilla = 0.0;
  for (std::size_t i = 1; i < result.modes.size(); ++i) {
    max_ancilla = std::max(max_ancilla, std::abs(result.modes[i]));
  }
  std::string schedule;
  for (double tau : result.schedule) {
    if (!schedule.empty()) schedule += ';';
    schedule += format_number(tau, digits);
  }
  OutputRecord record;
  record.command = "cascade";
  record.parameters.emplace_back("n", std::int64_t{args.n});
  record.parameters.emplace_back("alpha", args.alpha);
  record.parameters.emplace_back("scheme", args.scheme);
  record.columns = {"n",           "scheme",         "output_re",       "output_im",
                    "beam_splitters", "max_ancilla_amplitude", "residual_energy", "schedule"};
  record.rows.push_back({std::int64_t{args.n}, args.scheme, result.combined().real(),
                         result.combined().imag(), static_cast<std::int64_t>(result.beam_splitters()),
                         max_ancilla, result.residual_energy, schedule});
  return record;
}

int emit(const OutputRecord& record, const Common& common, std::ostream& out, std::ostream& err) {
  const std::string text = render(record, parse_format(common.format), common.digits);
  if (common.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(common.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << common.output << "'\n";
    return kExitParameterError;
  }
  file << text;
  return kExitOk;
}

}  // namespace

std::string render(const OutputRecord& record, Format format, int digits) {
  switch (format) {
    case Format::kCsv:
      return render_csv(record, digits);
    case Format::kJson:
      return render_json(record, digits);
    case Format::kText:
      break;
  }
  return render_text(record, digits);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator and closed-form analytics for Gaussian n->m coherent-state cloning"};
  app.require_subcommand(1);

  Common common;
  MachineArgs fidelity_args;
  auto* fidelity = app.add_subcommand("fidelity", "Closed-form clone fidelity for one machine");
  add_machine(fidelity, fidelity_args, true);
  add_common(fidelity, common);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Optimal fidelity table over n, m and efficiency");
  sweep->add_option("--n-max", sweep_args.n_max, "Largest number of input copies")->required();
  sweep->add_option("--m-max", sweep_args.m_max, "Largest number of output clones")->required();
  sweep->add_option("--eta", sweep_args.etas, "Comma-separated efficiencies")
      ->required()
      ->delimiter(',');
  add_common(sweep, common);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo trajectories against closed forms");
  add_machine(simulate, sim_args.machine, true);
  simulate->add_option("--samples", sim_args.samples, "Number of trajectories")->capture_default_str();
  simulate->add_option("--seed", sim_args.seed, "Master seed")->capture_default_str();
  simulate->add_option("--shards", sim_args.shards, "Worker threads")->capture_default_str();
  simulate->add_flag("--strict", sim_args.strict, "Exit 3 if any |z| exceeds 6");
  add_common(simulate, common);

  CascadeArgs cascade_args;
  auto* cascade = app.add_subcommand("cascade", "Combine n equal coherent states into one mode");
  cascade->add_option("--n", cascade_args.n, "Number of equal inputs")->required();
  cascade->add_option("--alpha", cascade_args.alpha, "Input amplitude, a+bi")->capture_default_str();
  cascade->add_option("--scheme", cascade_args.scheme, "Combining network")
      ->check(CLI::IsMember({"sequential", "tree"}))
      ->capture_default_str();
  add_common(cascade, common);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameterError;
  }

  try {
    if (fidelity->parsed()) return emit(cmd_fidelity(fidelity_args), common, out, err);
    if (sweep->parsed()) return emit(cmd_sweep(sweep_args), common, out, err);
    if (cascade->parsed()) return emit(cmd_cascade(cascade_args, common.digits), common, out, err);
    if (simulate->parsed()) {
      bool consistent = true;
      const int code = emit(cmd_simulate(sim_args, consistent), common, out, err);
      if (code != kExitOk) return code;
      if (sim_args.strict && !consistent) {
        err << "error: Monte Carlo estimate deviates from the closed form by more than "
            << kStrictZScore << " standard errors\n";
        return kExitConsistencyFailure;
      }
      return kExitOk;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameterError;
  } catch (const CombineError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConsistencyFailure;
  }
  return kExitParameterError;
}

}  // namespace clonesim::cli

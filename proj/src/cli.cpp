#include "qcemu/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "qcemu/dynamics.hpp"
#include "qcemu/io.hpp"
#include "qcemu/observables.hpp"
#include "qcemu/oversample.hpp"
#include "qcemu/spectral.hpp"
#include "qcemu/verify.hpp"

namespace qcemu::cli {

namespace {

struct SubcommandInfo {
  const char* name;
  Subcommand value;
  const char* help;
};

constexpr SubcommandInfo subcommands[] = {
    {"orbits", Subcommand::Orbits, "Decompose dynamics into orbits (JSON)"},
    {"evolve", Subcommand::Evolve, "Evolve a configuration state for time t (CSV n,re,im,prob)"},
    {"interpolate", Subcommand::Interpolate, "Continuous-time state of an orbit at time t (JSON state)"},
    {"energy", Subcommand::Energy, "Average energy of a configuration state (JSON)"},
    {"uncertainty", Subcommand::Uncertainty, "Frequency-width report of a configuration state (JSON)"},
    {"oversample", Subcommand::Oversample, "Isomorphism defect sweep of oversampled orbits (CSV M,t,defect)"},
    {"limit", Subcommand::Limit, "Offset-class amplitude profiles of oversampled states (CSV)"},
    {"figure", Subcommand::Figure, "|S(N,u)|^2 against the unit-height gaussian (CSV u,s2,gauss)"},
    {"verify", Subcommand::Verify, "Run every verification check on a dynamics file (JSON report)"},
};

bool needs_input(Subcommand s) {
  return s == Subcommand::Orbits || s == Subcommand::Evolve || s == Subcommand::Interpolate ||
         s == Subcommand::Energy || s == Subcommand::Uncertainty || s == Subcommand::Verify;
}

std::string usage() {
  std::string out = "usage: qcemu <subcommand> [options]\n\nsubcommands:\n";
  for (const auto& s : subcommands) out += std::string("  ") + s.name + "\t" + s.help + "\n";
  out += "\nrun 'qcemu <subcommand> --help' for options\n";
  return out;
}

void add_global_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("-o,--output", cfg.output_path, "Output file (default: standard output)");
  app.add_option("--tau", cfg.global.tau, "Time between updates")->check(CLI::PositiveNumber);
  app.add_option("--h", cfg.global.h, "Planck-constant unit")->check(CLI::PositiveNumber);
  app.add_flag("--zero-point", cfg.global.zero_point, "Add h/(2 T_d) to every energy level");
  app.add_option("--seed", cfg.global.rng_seed, "Random seed");
  app.add_option("--tol-abs", cfg.global.tolerance_abs, "Absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-rel", cfg.global.tolerance_rel, "Relative tolerance")->check(CLI::PositiveNumber);
}

void configure(CLI::App& app, Subcommand s, RunConfig& cfg) {
  add_global_options(app, cfg);
  if (needs_input(s)) app.add_option("-i,--input", cfg.input_path, "Dynamics JSON file")->required();
  switch (s) {
    case Subcommand::Evolve:
      app.add_option("--state", cfg.state, "Initial configuration index")->check(CLI::NonNegativeNumber);
      app.add_option("--t", cfg.t, "Evolution time");
      break;
    case Subcommand::Interpolate:
      app.add_option("--orbit", cfg.orbit, "Orbit id")->check(CLI::NonNegativeNumber);
      app.add_option("--t", cfg.t, "Time");
      break;
    case Subcommand::Energy:
      app.add_option("--state", cfg.state, "Configuration index")->check(CLI::NonNegativeNumber);
      break;
    case Subcommand::Uncertainty:
      app.add_option("--state", cfg.state, "Configuration index")->check(CLI::NonNegativeNumber);
      app.add_option("--tau-min", cfg.tau_min, "Minimum time between orthogonal states")
          ->check(CLI::PositiveNumber);
      break;
    case Subcommand::Oversample:
      app.add_option("--N", cfg.sites, "Base orbit length")->check(CLI::PositiveNumber);
      app.add_option("--M", cfg.factors, "Oversampling factors")->check(CLI::PositiveNumber);
      app.add_option("--samples", cfg.samples, "Time grid points per factor")->check(CLI::PositiveNumber);
      break;
    case Subcommand::Limit:
      app.add_option("--N", cfg.sites, "Base orbit length")->check(CLI::PositiveNumber);
      app.add_option("--M", cfg.factors, "Oversampling factors")->check(CLI::PositiveNumber);
      app.add_option("--x", cfg.x, "Profile centre in [0, N)");
      break;
    case Subcommand::Figure:
      app.add_option("--N", cfg.sites, "Kernel length")->check(CLI::Range(2LL, 1LL << 40));
      app.add_option("--range", cfg.range, "Half-width of the u grid")->check(CLI::PositiveNumber);
      app.add_option("--samples", cfg.samples, "Grid intervals")->check(CLI::PositiveNumber);
      break;
    default:
      break;
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Located {
  ClassicalDynamics dyn;
  OrbitDecomposition dec;
};

Located load(const RunConfig& cfg) {
  auto dyn = load_dynamics(cfg.input_path);
  auto dec = decompose_orbits(dyn);
  return {std::move(dyn), std::move(dec)};
}

OrbitPosition position_of(const Located& l, long long state) {
  if (state < 0 || static_cast<std::size_t>(state) >= l.dyn.num_states())
    throw Error(ErrorKind::IndexOutOfRange, "state " + std::to_string(state) + " out of range");
  return l.dec.state_to_orbit[static_cast<std::size_t>(state)];
}

void require_spectral(const Orbit& o) {
  if (o.size() > max_spectral_length)
    throw Error(ErrorKind::TooLarge, "orbit length exceeds the 4096-state spectral limit");
}

int run_orbits(const RunConfig& cfg) {
  emit_text(dump(decomposition_to_json(load(cfg).dec)), cfg.output_path);
  return Success;
}

int run_evolve(const RunConfig& cfg) {
  const auto l = load(cfg);
  const auto pos = position_of(l, cfg.state);
  const Orbit& orbit = l.dec.orbits[pos.orbit];
  require_spectral(orbit);
  const auto s = evolve(config_basis_state(orbit, pos.position), cfg.t, cfg.global);
  Table table{{"n", "re", "im", "prob"}, {}};
  for (Index n = 0; n < s.size(); ++n) {
    const auto a = s.amplitudes(n);
    table.add_row({static_cast<double>(n), a.real(), a.imag(), std::norm(a)});
  }
  emit_table(table, cfg.output_path);
  return Success;
}

int run_interpolate(const RunConfig& cfg) {
  const auto l = load(cfg);
  if (cfg.orbit < 0 || static_cast<std::size_t>(cfg.orbit) >= l.dec.orbits.size())
    throw Error(ErrorKind::IndexOutOfRange, "orbit " + std::to_string(cfg.orbit) + " does not exist");
  const Orbit& orbit = l.dec.orbits[static_cast<std::size_t>(cfg.orbit)];
  const QuantumState s{orbit.id, Basis::Configuration, interpolate_config(orbit, cfg.t, cfg.global)};
  emit_text(dump(state_to_json(s)), cfg.output_path);
  return Success;
}

int run_energy(const RunConfig& cfg) {
  const auto l = load(cfg);
  const auto pos = position_of(l, cfg.state);
  const Orbit& orbit = l.dec.orbits[pos.orbit];
  require_spectral(orbit);
  const auto& g = cfg.global;
  const double e = average_energy(config_basis_state(orbit, pos.position),
                                  energy_spectrum(orbit, g, g.zero_point));
  const double half_rate = g.h / (2.0 * g.tau);
  const Json out = {{"orbit", orbit.id},
                    {"length", orbit.size()},
                    {"period", orbit.period(g.tau)},
                    {"zero_point", g.zero_point},
                    {"energy", e},
                    {"mean_frequency", e / g.h},
                    {"h_nu_over_2", half_rate},
                    {"equals_h_nu_over_2", std::abs(e - half_rate) <= g.tolerance_rel * half_rate}};
  emit_text(dump(out), cfg.output_path);
  return Success;
}

int run_uncertainty(const RunConfig& cfg) {
  const auto l = load(cfg);
  const auto pos = position_of(l, cfg.state);
  const Orbit& orbit = l.dec.orbits[pos.orbit];
  require_spectral(orbit);
  const auto& g = cfg.global;
  const auto rep = width_report(config_basis_state(orbit, pos.position), energy_spectrum(orbit, g, g.zero_point),
                                orbit.size(), orbit.period(g.tau), cfg.tau_min, g);
  const Json out = {{"orbit", orbit.id},
                    {"B", rep.bandwidth},
                    {"nu_bar", rep.mean_frequency},
                    {"nu_0", rep.lowest_frequency},
                    {"first_moment_width", rep.first_moment_width},
                    {"B_min_states", rep.min_bandwidth_states},
                    {"B_min_pair", rep.min_bandwidth_pair},
                    {"bandwidth_bound_holds", rep.bandwidth_bound_holds},
                    {"first_moment_bound_holds", rep.first_moment_bound_holds}};
  emit_text(dump(out), cfg.output_path);
  return Success;
}

Orbit synthetic_orbit(long long length) {
  Orbit o{0, std::vector<State>(static_cast<std::size_t>(length))};
  std::iota(o.members.begin(), o.members.end(), State{0});
  return o;
}

int run_oversample(const RunConfig& cfg) {
  const Orbit base = synthetic_orbit(cfg.sites);
  Table table{{"M", "t", "defect"}, {}};
  for (long long m : cfg.factors) {
    const auto ov = oversample(base, m);
    for (long long j = 0; j < cfg.samples; ++j) {
      const double t = static_cast<double>(cfg.sites) * static_cast<double>(j) / static_cast<double>(cfg.samples);
      table.add_row({static_cast<double>(m), t, verify_isomorphism(ov, t, 0.0)});
    }
  }
  emit_table(table, cfg.output_path);
  return Success;
}

int run_limit(const RunConfig& cfg) {
  const Orbit base = synthetic_orbit(cfg.sites);
  std::vector<Index> factors(cfg.factors.begin(), cfg.factors.end());
  const auto profiles = limit_superposition_profile(base, factors, cfg.x);
  Table table{{"M", "offset", "u", "n", "re", "im"}, {}};
  for (const auto& p : profiles)
    for (Index j = 0; j < p.factor; ++j)
      for (Index n = 0; n < p.values.cols(); ++n)
        table.add_row({static_cast<double>(p.factor), static_cast<double>(j), p.offset(j),
                       static_cast<double>(n), p.values(j, n).real(), p.values(j, n).imag()});
  emit_table(table, cfg.output_path);
  return Success;
}

int run_figure(const RunConfig& cfg) {
  Table table{{"u", "s2", "gauss"}, {}};
  for (const auto& row : figure_data(cfg.sites, cfg.range, cfg.samples))
    table.add_row({row.u, row.kernel_prob, row.gaussian});
  emit_table(table, cfg.output_path);
  return Success;
}

int run_verify_cmd(const RunConfig& cfg) {
  const auto report = run_verify(read_json_file(cfg.input_path), cfg.global);
  emit_text(dump(report.to_json()), cfg.output_path);
  return report.all_passed() ? Success : VerificationFailed;
}

}  // namespace

const char* to_string(Subcommand s) noexcept {
  for (const auto& info : subcommands)
    if (info.value == s) return info.name;
  return "?";
}

RunConfig parse_args(const std::vector<std::string>& argv) {
  if (argv.size() == 2 && (argv[1] == "-h" || argv[1] == "--help"))
    throw UsageError(UsageErrorKind::HelpRequested, usage());
  if (argv.size() < 2) throw UsageError(UsageErrorKind::UnknownSubcommand, "missing subcommand\n" + usage());
  const std::string& name = argv[1];
  const auto* info = std::find_if(std::begin(subcommands), std::end(subcommands),
                                  [&](const SubcommandInfo& s) { return name == s.name; });
  if (info == std::end(subcommands))
    throw UsageError(UsageErrorKind::UnknownSubcommand, "unknown subcommand '" + name + "'\n" + usage());

  RunConfig cfg;
  cfg.subcommand = info->value;
  CLI::App app{info->help, "qcemu " + name};
  // -h would collide with the --h override.
  app.set_help_flag("--help", "Print this help message and exit");
  configure(app, info->value, cfg);

  std::vector<const char*> args{argv[0].c_str()};
  for (std::size_t i = 2; i < argv.size(); ++i) args.push_back(argv[i].c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError(UsageErrorKind::HelpRequested, app.help());
  } catch (const CLI::RequiredError& e) {
    const std::string msg = e.what();
    throw UsageError(msg.find("--input") != std::string::npos ? UsageErrorKind::MissingInput
                                                              : UsageErrorKind::BadFlag,
                     msg);
  } catch (const CLI::ParseError& e) {
    throw UsageError(UsageErrorKind::BadFlag, e.what());
  }
  return cfg;
}

int run(const RunConfig& cfg) {
  cfg.global.validate();
  switch (cfg.subcommand) {
    case Subcommand::Orbits: return run_orbits(cfg);
    case Subcommand::Evolve: return run_evolve(cfg);
    case Subcommand::Interpolate: return run_interpolate(cfg);
    case Subcommand::Energy: return run_energy(cfg);
    case Subcommand::Uncertainty: return run_uncertainty(cfg);
    case Subcommand::Oversample: return run_oversample(cfg);
    case Subcommand::Limit: return run_limit(cfg);
    case Subcommand::Figure: return run_figure(cfg);
    case Subcommand::Verify: return run_verify_cmd(cfg);
  }
  return UsageFailure;
}

int main(const std::vector<std::string>& argv) {
  RunConfig cfg;
  try {
    cfg = parse_args(argv);
  } catch (const UsageError& e) {
    if (e.kind() == UsageErrorKind::HelpRequested) {
      std::cout << e.what();
      return Success;
    }
    std::cerr << "qcemu: " << e.what() << "\n";
    return UsageFailure;
  }
  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "qcemu: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return InputFailure;
  } catch (const std::exception& e) {
    std::cerr << "qcemu: " << e.what() << "\n";
    return InputFailure;
  }
}

}  // namespace qcemu::cli

#include "qcemu/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qcemu/kernel.hpp"
#include "qcemu/observables.hpp"
#include "qcemu/oversample.hpp"
#include "qcemu/random.hpp"
#include "qcemu/spectral.hpp"

namespace qcemu {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Json VerificationReport::to_json() const {
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    Json j = {{"module", c.module},
              {"name", c.name},
              {"defect", c.defect},
              {"tolerance", c.tolerance},
              {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  return {{"seed", seed},
          {"passed", all_passed()},
          {"num_checks", checks.size()},
          {"num_failed", failed},
          {"checks", std::move(list)}};
}

namespace {

struct Outcome {
  double defect = 0;
  std::string detail;
};

class Runner {
public:
  explicit Runner(std::uint64_t seed) { report_.seed = seed; }

  void run(const std::string& module, const std::string& name, double tolerance,
           const std::function<Outcome()>& body) {
    Check c{module, name, 0.0, tolerance, false, {}};
    try {
      Outcome o = body();
      c.defect = o.defect;
      c.detail = std::move(o.detail);
      c.passed = o.defect <= tolerance;  // NaN fails
    } catch (const Error& e) {
      c.defect = std::numeric_limits<double>::infinity();
      c.detail = std::string(to_string(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      c.defect = std::numeric_limits<double>::infinity();
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  VerificationReport take() { return std::move(report_); }

private:
  VerificationReport report_;
};

Orbit make_orbit(Index length, Index id = 0) {
  Orbit o{id, std::vector<State>(static_cast<std::size_t>(length))};
  std::iota(o.members.begin(), o.members.end(), State{0});
  return o;
}

// One representative orbit per distinct length; the construction depends on
// the orbit only through N_d.
std::vector<Orbit> representatives(const OrbitDecomposition& dec) {
  std::map<Index, const Orbit*> by_length;
  for (const auto& o : dec.orbits) by_length.emplace(o.size(), &o);
  std::vector<Orbit> out;
  for (const auto& [len, o] : by_length) out.push_back(*o);
  return out;
}

void require_spectral_size(const Orbit& o) {
  if (o.size() > max_spectral_length)
    throw Error(ErrorKind::TooLarge,
                "orbit " + std::to_string(o.id) + " of length " + std::to_string(o.size()) +
                    " exceeds the 4096-state spectral limit");
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Index uniform_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// Largest |<psi(j tau)|psi(k tau)>| over j != k < count, for an
// energy-basis state under cfg.
double max_overlap(const QuantumState& e, Index count, const GlobalConfig& cfg) {
  std::vector<VectorXcd> pts;
  for (Index k = 0; k < count; ++k)
    pts.push_back(evolve(e, static_cast<double>(k) * cfg.tau, cfg).amplitudes);
  double worst = 0;
  for (Index j = 0; j < count; ++j)
    for (Index k = j + 1; k < count; ++k) worst = std::max(worst, std::abs(pts[j].dot(pts[k])));
  return worst;
}

void dynamics_checks(Runner& r, const ClassicalDynamics& dyn, const OrbitDecomposition& dec) {
  r.run("dynamics", "bijectivity", 0.0, [] { return Outcome{0.0, {}}; });

  r.run("dynamics", "orbit partition", 0.0, [&] {
    std::size_t bad = 0, total = 0;
    std::vector<int> hits(dyn.num_states(), 0);
    State prev_min = 0;
    for (const auto& o : dec.orbits) {
      total += o.members.size();
      if (o.id > 0 && o.members.front() <= prev_min) ++bad;
      prev_min = o.members.front();
      for (Index n = 0; n < o.size(); ++n) {
        const State s = o.members[n];
        ++hits[s];
        if (dec.state_to_orbit[s].orbit != o.id || dec.state_to_orbit[s].position != n) ++bad;
        if (dyn.image(s) != o.members[(n + 1) % o.size()]) ++bad;
        if (s < o.members.front()) ++bad;
      }
    }
    for (int h : hits) bad += h != 1;
    bad += total != dyn.num_states();
    return Outcome{static_cast<double>(bad), {}};
  });

  r.run("dynamics", "full-period return", 0.0, [&] {
    // Every state when affordable, otherwise each orbit's first member.
    constexpr std::size_t budget = 50'000'000;
    std::size_t bad = 0, cost = 0;
    for (const auto& o : dec.orbits) {
      const auto len = static_cast<std::size_t>(o.size());
      const bool all = cost + len * len <= budget;
      cost += all ? len * len : len;
      for (std::size_t i = 0; i < (all ? len : 1); ++i)
        bad += step(dyn, o.members[i], o.size()) != o.members[i];
      bad += step(dyn, step(dyn, o.members[0], 1), -1) != o.members[0];
    }
    return Outcome{static_cast<double>(bad), {}};
  });

  r.run("dynamics", "orbit_of matches decomposition", 0.0, [&] {
    const std::size_t count = dec.orbits.size();
    const std::size_t stride = std::max<std::size_t>(1, count / 64);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < count; i += stride) {
      const Orbit& o = dec.orbits[i];
      const Orbit found = orbit_of(dyn, o.members.back());
      bad += found.id != o.id || found.members != o.members;
    }
    return Outcome{static_cast<double>(bad), {}};
  });

  r.run("dynamics", "lattice gas bijectivity", 0.0, [] {
    std::size_t bad = 0;
    for (int sites = 1; sites <= 6; ++sites)
      for (bool reflect : {false, true}) {
        const auto lga = from_two_channel_lga(sites, reflect);
        std::size_t total = 0;
        for (const auto& o : decompose_orbits(lga).orbits) total += o.members.size();
        bad += total != (std::size_t{1} << (2 * sites));
      }
    return Outcome{static_cast<double>(bad), {}};
  });
}

void kernel_checks(Runner& r, Rng& rng) {
  r.run("kernel", "Kronecker property at integers", 1e-12, [] {
    double worst = 0;
    for (Index n = 1; n <= 64; ++n)
      for (Index u = -3 * n; u <= 3 * n; ++u) {
        const auto s = periodic_sinc(n, static_cast<double>(u));
        worst = std::max(worst, u % n == 0 ? std::abs(s - 1.0) : std::abs(s));
      }
    return Outcome{worst, {}};
  });

  r.run("kernel", "periodicity", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const Index n = uniform_index(rng, 1, 256);
      const double u = uniform(rng, -2.0 * n, 2.0 * n);
      worst = std::max(worst, std::abs(periodic_sinc(n, u + n) - periodic_sinc(n, u)));
    }
    return Outcome{worst, {}};
  });

  r.run("kernel", "closed form matches direct sum", 1e-11, [&] {
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const Index n = uniform_index(rng, 1, 1024);
      const double u = uniform(rng, -2.0 * n, 2.0 * n);
      worst = std::max(worst, std::abs(periodic_sinc(n, u) - kernel_direct_sum(n, u, 0)));
    }
    return Outcome{worst, "10^4 random (N <= 1024, |u| <= 2N)"};
  });

  r.run("kernel", "conjugate symmetry", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const Index n = uniform_index(rng, 1, 256);
      const double u = uniform(rng, -2.0 * n, 2.0 * n);
      worst = std::max(worst, std::abs(periodic_sinc(n, -u) - std::conj(periodic_sinc(n, u))));
    }
    return Outcome{worst, {}};
  });

  r.run("kernel", "interpolation partition of unity", 1e-10, [&] {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const Index n = uniform_index(rng, 1, 256);
      const double t = uniform(rng, -2.0 * n, 2.0 * n);
      std::complex<double> acc = 0;
      for (Index k = 0; k < n; ++k) acc += periodic_sinc(n, static_cast<double>(k) - t);
      worst = std::max(worst, std::abs(acc - 1.0));
    }
    return Outcome{worst, {}};
  });

  r.run("kernel", "large-N sinc limit", 1e-4, [] {
    return Outcome{std::abs(periodic_sinc(100000, 0.5) - sinc_limit(0.5)), "N = 10^5, u = 0.5"};
  });
}

void spectral_checks(Runner& r, Rng& rng, const std::vector<Orbit>& reps, const GlobalConfig& cfg) {
  r.run("spectral", "unit-step isomorphism", 1e-10, [&] {
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      for (Index n = 0; n < o.size(); ++n) {
        const auto s = evolve(config_basis_state(o, n), cfg.tau, cfg);
        worst = std::max(worst, 1.0 - std::abs(s.amplitudes((n + 1) % o.size())));
      }
    }
    return Outcome{worst, "1 - |<n+1|U|n>| over every n of every orbit length"};
  });

  r.run("spectral", "evolution preserves norm", 1e-12, [&] {
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      for (int i = 0; i < 4; ++i) {
        const auto s = random_state(rng, o.size(), Basis::Configuration, o.id);
        const double t = uniform(rng, -2.0, 2.0) * o.period(cfg.tau);
        worst = std::max(worst, std::abs(evolve(s, t, cfg).norm() - s.norm()));
      }
    }
    return Outcome{worst, {}};
  });

  r.run("spectral", "basis change round trip", 1e-11, [&] {
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      const auto s = random_state(rng, o.size(), Basis::Configuration, o.id);
      worst = std::max(worst,
                       (to_config_basis(to_energy_basis(s)).amplitudes - s.amplitudes).cwiseAbs().maxCoeff());
    }
    return Outcome{worst, {}};
  });

  r.run("spectral", "fast transform matches direct", 1e-10, [&] {
    const VectorXcd v = random_unit_vector(rng, 360);
    double worst = 0;
    for (auto dir : {DftDirection::Forward, DftDirection::Inverse})
      worst = std::max(worst, (dft_fast(v, dir) - dft_direct(v, dir)).cwiseAbs().maxCoeff());
    return Outcome{worst, "N = 360"};
  });

  r.run("spectral", "interpolation matches evolution", 1e-10, [&] {
    GlobalConfig plain = cfg;
    plain.zero_point = false;
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      for (int i = 0; i < 4; ++i) {
        const double t = uniform(rng, 0.0, o.period(cfg.tau));
        const auto via_evolve = evolve(config_basis_state(o, 0), t, plain);
        worst = std::max(worst, (interpolate_config(o, t, cfg) - via_evolve.amplitudes).cwiseAbs().maxCoeff());
      }
    }
    return Outcome{worst, {}};
  });

  r.run("spectral", "continuous-time inner product", 1e-10, [&] {
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      const double n = static_cast<double>(o.size());
      for (int i = 0; i < 100; ++i) {
        const double x = uniform(rng, 0.0, n), xp = uniform(rng, 0.0, n);
        const auto a = interpolate_config(o, xp * cfg.tau, cfg);
        const auto b = interpolate_config(o, x * cfg.tau, cfg);
        worst = std::max(worst, std::abs(a.dot(b) - periodic_sinc(o.size(), xp - x)));
      }
    }
    return Outcome{worst, "100 random pairs per orbit length"};
  });

  r.run("spectral", "configuration-state average energy", 1e-10, [&] {
    const double scale = cfg.h / (2.0 * cfg.tau);
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      const auto s = config_basis_state(o, 0);
      const double t_d = o.period(cfg.tau);
      const double plain = average_energy(s, energy_spectrum(o, cfg, false));
      const double expected = cfg.h * static_cast<double>(o.size() - 1) / (2.0 * t_d);
      const double with_zp = average_energy(s, energy_spectrum(o, cfg, true));
      worst = std::max({worst, std::abs(plain - expected) / scale, std::abs(with_zp - scale) / scale});
    }
    return Outcome{worst, "h(N_d-1)/(2T_d), and h nu/2 with zero-point offset"};
  });

  r.run("spectral", "reconstruction exact at samples and linear", 1e-9, [&] {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const Index n = uniform_index(rng, 1, 32);
      const Index k = uniform_index(rng, -n, n);
      const VectorXcd f = random_unit_vector(rng, n), g = random_unit_vector(rng, n);
      for (Index j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(reconstruct(f, static_cast<double>(j), k) - f(j)));
      const std::complex<double> a(0.3, -1.1), b(-0.7, 0.2);
      const double t = uniform(rng, 0.0, static_cast<double>(n));
      const VectorXcd mix = a * f + b * g;
      worst = std::max(worst, std::abs(reconstruct(mix, t, k) -
                                       (a * reconstruct(f, t, k) + b * reconstruct(g, t, k))));
    }
    return Outcome{worst, {}};
  });

  r.run("spectral", "bandlimited reconstruction", 1e-9, [&] {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const Index n = uniform_index(rng, 1, 64);
      const Index k = uniform_index(rng, -2 * n, 2 * n);
      const auto f = random_bandlimited(rng, n, k, static_cast<double>(n));
      const VectorXcd samples = f.samples();
      for (int j = 0; j < 50; ++j) {
        const double t = uniform(rng, -static_cast<double>(n), 2.0 * n);
        worst = std::max(worst, std::abs(reconstruct(samples, t, k) - f(t)));
      }
    }
    return Outcome{worst, {}};
  });

  r.run("spectral", "integral equals sample sum", 1e-9, [&] {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const Index n = uniform_index(rng, 1, 32);
      const Index kf = uniform_index(rng, -2 * n, 2 * n);
      const auto f = random_bandlimited(rng, n, kf, 1.0);
      const auto g = random_bandlimited(rng, n, 1 - n - kf, 1.0);
      const auto coarse = bandlimited_product_sum(f.samples(), g.samples());
      const auto fine = bandlimited_product_sum(f.samples(4 * n), g.samples(4 * n));
      worst = std::max(worst, std::abs(coarse - fine));
    }
    return Outcome{worst, "N points vs 4N points"};
  });

  r.run("spectral", "closure over continuous times", 1e-8, [&] {
    double worst = 0;
    for (Index n : {2, 8, 32}) worst = std::max(worst, closure_defect(make_orbit(n), 4 * n));
    for (const auto& o : reps)
      if (o.size() <= 64) worst = std::max(worst, closure_defect(o, 2 * o.size()));
    return Outcome{worst, {}};
  });

  r.run("spectral", "Dirac delta property", 1e-8, [&] {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      const Index n = uniform_index(rng, 1, 16);
      const Orbit o = make_orbit(n);
      const auto f = random_bandlimited(rng, n, 0, o.period(cfg.tau));
      const double tp = uniform(rng, 0.0, o.period(cfg.tau));
      worst = std::max(worst, dirac_defect(o, f, tp, cfg));
    }
    return Outcome{worst, "50 random (f, t')"};
  });
}

void oversample_checks(Runner& r, Rng& rng, const std::vector<Orbit>& reps, const GlobalConfig& cfg) {
  std::vector<Orbit> bases{make_orbit(5)};
  for (const auto& o : reps)
    if (o.size() >= 2 && o.size() <= 64 && o.size() != 5 && bases.size() < 4) bases.push_back(o);
  const std::vector<Index> factors{1, 2, 4, 8};

  r.run("oversample", "bandlimited basis orthonormal", 1e-10, [&] {
    double worst = 0;
    for (const auto& o : bases)
      for (Index m : factors) {
        const auto ov = oversample(o, m);
        MatrixXcd basis(ov.extended_length(), o.size());
        for (Index n = 0; n < o.size(); ++n) basis.col(n) = bandlimited_basis_state(ov, n).state.amplitudes;
        const MatrixXcd gram = basis.adjoint() * basis;
        worst = std::max(worst, (gram - MatrixXcd::Identity(o.size(), o.size())).cwiseAbs().maxCoeff());
      }
    return Outcome{worst, {}};
  });

  r.run("oversample", "bandlimited basis matches kernel form", 1e-10, [&] {
    double worst = 0;
    for (const auto& o : bases)
      for (Index m : factors) {
        const auto ov = oversample(o, m);
        for (Index n = 0; n < o.size(); ++n)
          worst = std::max(worst, (bandlimited_basis_state(ov, n).state.amplitudes -
                                   bandlimited_evolve(ov, static_cast<double>(n)))
                                      .cwiseAbs()
                                      .maxCoeff());
      }
    return Outcome{worst, {}};
  });

  r.run("oversample", "bandlimited average energy", 1e-10, [&] {
    const double scale = cfg.h / (2.0 * cfg.tau);
    double worst = 0;
    for (const auto& o : bases)
      for (Index m : factors) {
        const auto ov = oversample(o, m);
        const auto spec = energy_spectrum(ov.extended_orbit(), ov.extended_config(cfg), false);
        const double expected = cfg.h * static_cast<double>(o.size() - 1) / (2.0 * o.period(cfg.tau));
        for (Index n = 0; n < o.size(); ++n)
          worst = std::max(worst, std::abs(average_energy(bandlimited_basis_state(ov, n).state, spec) -
                                           expected) / scale);
      }
    return Outcome{worst, "equals the H_1 value h(N_d-1)/(2T_d) for every M"};
  });

  r.run("oversample", "bandlimited isomorphism at integer times", 1e-10, [&] {
    double worst = 0;
    for (const auto& o : bases)
      for (Index m : factors) {
        const auto ov = oversample(o, m);
        GlobalConfig ext = ov.extended_config(cfg);
        ext.zero_point = false;
        for (Index n = 0; n < o.size(); ++n) {
          const auto moved = evolve(bandlimited_basis_state(ov, n).state, cfg.tau, ext);
          const auto next = bandlimited_basis_state(ov, (n + 1) % o.size()).state;
          worst = std::max(worst, 1.0 - fidelity(next.amplitudes, moved.amplitudes));
        }
      }
    return Outcome{worst, {}};
  });

  r.run("oversample", "bandlimited evolution matches H_M", 1e-10, [&] {
    double worst = 0;
    for (const auto& o : bases)
      for (Index m : factors) {
        const auto ov = oversample(o, m);
        GlobalConfig ext = ov.extended_config(cfg);
        ext.zero_point = false;
        const auto start = bandlimited_basis_state(ov, 0).state;
        for (int i = 0; i < 4; ++i) {
          const double x = uniform(rng, 0.0, static_cast<double>(o.size()));
          const auto via_h = evolve(start, x * cfg.tau, ext);
          worst = std::max(worst, (via_h.amplitudes - bandlimited_evolve(ov, x)).cwiseAbs().maxCoeff());
        }
      }
    return Outcome{worst, {}};
  });

  r.run("oversample", "offset regrouping exact", 0.0, [&] {
    double worst = 0;
    for (const auto& o : bases)
      for (Index m : factors) {
        const auto ov = oversample(o, m);
        const double x = uniform(rng, 0.0, static_cast<double>(o.size()));
        worst = std::max(worst, (ungroup<double>(bandlimited_evolve_grouped(ov, x)) - bandlimited_evolve(ov, x))
                                    .cwiseAbs()
                                    .maxCoeff());
      }
    return Outcome{worst, "bitwise"};
  });

  r.run("oversample", "inner products independent of M", 1e-9, [&] {
    double worst = 0;
    for (const auto& o : bases) {
      const double n = static_cast<double>(o.size());
      for (int i = 0; i < 20; ++i) {
        const double t = uniform(rng, 0.0, n), tp = uniform(rng, 0.0, n);
        const auto target = periodic_sinc(o.size(), tp - t);
        for (Index m : factors) {
          const auto ov = oversample(o, m);
          const auto ip = bandlimited_evolve(ov, tp).dot(bandlimited_evolve(ov, t));
          worst = std::max(worst, std::abs(ip - target));
        }
      }
    }
    return Outcome{worst, "M in {1,2,4,8}"};
  });
}

void observable_checks(Runner& r, Rng& rng, const std::vector<Orbit>& reps, const GlobalConfig& cfg) {
  r.run("observables", "configuration-state bandwidth equality", 1e-12, [&] {
    double worst = 0;
    for (const auto& o : reps) {
      require_spectral_size(o);
      const auto rep = width_report(config_basis_state(o, 0), energy_spectrum(o, cfg, cfg.zero_point),
                                    o.size(), o.period(cfg.tau), {}, cfg);
      worst = std::max(worst, std::abs(rep.bandwidth_slack()) * cfg.tau);
    }
    return Outcome{worst, "B = (N-1)/T"};
  });

  r.run("observables", "first-moment width bound", 1e-10, [&] {
    // Defect is the worst violation of the bound, or of the orthogonality
    // that qualifies a constructed state.
    double worst = 0;
    auto examine = [&](const Orbit& o, const QuantumState& e, Index distinct, double period) {
      GlobalConfig plain = cfg;
      plain.zero_point = false;
      worst = std::max(worst, max_overlap(e, distinct, plain));
      const auto rep = width_report(e, energy_spectrum(o, cfg, cfg.zero_point), distinct, period, {}, cfg);
      worst = std::max(worst, -rep.first_moment_slack() * cfg.tau);
    };
    std::vector<Orbit> orbits;
    for (const auto& o : reps)
      if (o.size() >= 2 && o.size() <= 256) orbits.push_back(o);
    for (Index n : {2, 3, 5, 8}) orbits.push_back(make_orbit(n));
    for (const auto& o : orbits) {
      const Index n = o.size();
      examine(o, to_energy_basis(config_basis_state(o, 0)), n, o.period(cfg.tau));
      QuantumState phased{o.id, Basis::Energy, VectorXcd(n)};
      for (Index m = 0; m < n; ++m)
        phased.amplitudes(m) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), uniform(rng, 0.0, 2 * pi<double>));
      examine(o, phased, n, o.period(cfg.tau));
      for (Index stretch : {2, 3}) {
        const Orbit wide = make_orbit(stretch * n, o.id);
        QuantumState spread{o.id, Basis::Energy, VectorXcd::Zero(stretch * n)};
        for (Index m = 0; m < n; ++m) spread.amplitudes(stretch * m) = 1.0 / std::sqrt(static_cast<double>(n));
        examine(wide, spread, n, wide.period(cfg.tau));
      }
    }
    return Outcome{worst, "2(nu_bar - nu_0) >= B_min on constructed states"};
  });

  r.run("observables", "wavefunction normalization", 1e-10, [&] {
    double worst = 0;
    for (Index n : {1, 5, 10, 101}) {
      const ParticleModel p{n, uniform(rng, 0.5, 20.0), 1.0};
      for (int i = 0; i < 20; ++i) {
        const double t = uniform(rng, -3.0, 3.0) * p.length;
        double total = 0;
        for (Index k = 0; k < n; ++k) total += std::norm(particle_amplitude(p, static_cast<double>(k) * p.spacing(), t));
        worst = std::max(worst, std::abs(total - 1.0));
      }
    }
    return Outcome{worst, {}};
  });

  r.run("observables", "localization at integer times", 1e-12, [&] {
    double worst = 0;
    for (Index n : {1, 5, 10, 101}) {
      const ParticleModel p{n, static_cast<double>(n) * 0.75, 1.5};
      for (Index step = 0; step < 2 * n; ++step) {
        const double t = static_cast<double>(step) * p.hop_time();
        for (Index k = 0; k < n; ++k) {
          const double prob = std::norm(particle_amplitude(p, static_cast<double>(k) * p.spacing(), t));
          worst = std::max(worst, std::abs(prob - (k == step % n ? 1.0 : 0.0)));
        }
      }
    }
    return Outcome{worst, {}};
  });

  r.run("observables", "momentum-separation identity", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const ParticleModel p{uniform_index(rng, 1, 1000), uniform(rng, 0.01, 100.0), uniform(rng, 0.1, 10.0)};
      worst = std::max(worst, std::abs(momentum(p, cfg) * p.spacing() - cfg.h / 2.0) / (cfg.h / 2.0));
    }
    return Outcome{worst, "p lambda = h/2"};
  });
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    GlobalConfig cfg;
    const auto report = run_verify(from_particle_shift(2), cfg);
    std::vector<std::string> out;
    for (const auto& c : report.checks) out.push_back(c.module + "/" + c.name);
    return out;
  }();
  return names;
}

VerificationReport run_verify(const ClassicalDynamics& dyn, const GlobalConfig& cfg) {
  Runner r(cfg.rng_seed);
  Rng rng(cfg.rng_seed);

  OrbitDecomposition dec;
  bool decomposed = true;
  try {
    cfg.validate();
    dec = decompose_orbits(dyn);
  } catch (const Error& e) {
    r.run("dynamics", "orbit decomposition", 0.0, [&]() -> Outcome { throw e; });
    decomposed = false;
  }
  if (!decomposed) return r.take();

  const auto reps = representatives(dec);
  dynamics_checks(r, dyn, dec);
  kernel_checks(r, rng);
  spectral_checks(r, rng, reps, cfg);
  oversample_checks(r, rng, reps, cfg);
  observable_checks(r, rng, reps, cfg);
  return r.take();
}

VerificationReport run_verify(const Json& doc, const GlobalConfig& cfg) {
  try {
    return run_verify(dynamics_from_json(doc), cfg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Io) throw;
    Runner r(cfg.rng_seed);
    const std::string name = e.kind() == ErrorKind::NotBijective ? "bijectivity" : "input dynamics";
    r.run("dynamics", name, 0.0, [&]() -> Outcome { throw e; });
    return r.take();
  }
}

}  // namespace qcemu

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcemu/observables.hpp"
#include "qcemu/random.hpp"

using namespace qcemu;
using cd = std::complex<double>;

namespace {

Orbit ring(Index n) { return decompose_orbits(from_particle_shift(n)).orbits.at(0); }

}  // namespace

TEST_CASE("average energy of configuration states") {
  GlobalConfig cfg;
  for (Index n : {1, 2, 5, 101, 1024}) {
    const auto o = ring(n);
    const auto spec = energy_spectrum(o, cfg, false);
    const double expected = cfg.h * (n - 1) / (2.0 * o.period(cfg.tau));
    const auto c = config_basis_state(o, n / 2);
    CHECK(std::abs(average_energy(c, spec) - expected) <= 1e-10 * std::max(1.0, expected));

    // With the offset every configuration state sits at h nu / 2, nu = 1/tau.
    const auto zp = energy_spectrum(o, cfg, true);
    CHECK(std::abs(average_energy(c, zp) - cfg.h / (2 * cfg.tau)) < 1e-12);
  }
  // Two-state example.
  const auto o2 = ring(2);
  CHECK(average_energy(config_basis_state(o2, 0), energy_spectrum(o2, cfg, false)) == doctest::Approx(0.25));
  CHECK(average_energy(energy_basis_state(o2, 1), energy_spectrum(o2, cfg, false)) == doctest::Approx(0.5));
}

TEST_CASE("average energy is conserved and checks the orbit") {
  Rng rng(43);
  const GlobalConfig cfg;
  const auto o = ring(17);
  const auto spec = energy_spectrum(o, cfg, false);
  const auto psi = random_state(rng, 17);
  const double e0 = average_energy(psi, spec);
  for (double t : {0.3, 2.7, -11.1}) CHECK(std::abs(average_energy(evolve(psi, t, cfg), spec) - e0) < 1e-12);

  auto wrong = psi;
  wrong.orbit_id = 3;
  try {
    average_energy(wrong, spec);
    FAIL("expected OrbitMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrbitMismatch);
  }
  CHECK_THROWS_AS(average_energy(random_state(rng, 4), spec), Error);
}

TEST_CASE("particle model") {
  const ParticleModel p{10, 5.0, 2.0};
  CHECK(p.spacing() == 0.5);
  CHECK(p.hop_time() == 0.25);
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS((ParticleModel{0, 1.0, 1.0}.validate()), Error);
  CHECK_THROWS_AS((ParticleModel{3, -1.0, 1.0}.validate()), Error);

  // Localized on a site at integer multiples of the hop time.
  for (int j = 0; j < 10; ++j) {
    const double t = j * p.hop_time();
    for (int s = 0; s < 10; ++s) {
      const cd a = particle_amplitude(p, s * p.spacing(), t);
      CHECK(std::abs(std::abs(a) - (s == j ? 1.0 : 0.0)) < 1e-12);
    }
  }
  // Normalized over the sites at any time.
  for (double t : {0.1, 0.33, 1.7}) {
    double norm = 0;
    for (int s = 0; s < 10; ++s) norm += std::norm(particle_amplitude(p, s * p.spacing(), t));
    CHECK(std::abs(norm - 1.0) < 1e-10);
  }

  GlobalConfig cfg;
  cfg.h = 6.0;
  CHECK(momentum(p, cfg) == doctest::Approx(6.0));
  // p = E / v with E = h nu / 2, nu = 1 / hop time.
  CHECK(momentum(p, cfg) == doctest::Approx(cfg.h / (2 * p.hop_time()) / p.speed));
  // Separation of neighbouring sites times momentum is h / 2.
  CHECK(momentum(p, cfg) * p.spacing() == doctest::Approx(cfg.h / 2));
}

TEST_CASE("width report on configuration states") {
  GlobalConfig cfg;
  for (Index n : {2, 3, 10, 64}) {
    const auto o = ring(n);
    const auto spec = energy_spectrum(o, cfg, false);
    const double period = o.period(cfg.tau);
    const auto r = width_report(config_basis_state(o, 0), spec, n, period, {}, cfg);
    CHECK(std::abs(r.bandwidth - (n - 1) / period) < 1e-12);
    CHECK(std::abs(r.bandwidth_slack()) < 1e-12);
    CHECK(r.bandwidth_bound_holds);
    CHECK(r.lowest_frequency == 0.0);
    CHECK(std::abs(r.mean_frequency - (n - 1) / (2 * period)) < 1e-12);
    CHECK(std::abs(r.first_moment_width - (n - 1) / period) < 1e-12);
    CHECK(r.min_bandwidth_pair == doctest::Approx(n / (2 * period)));
    CHECK(r.first_moment_bound_holds);
    CHECK(r.first_moment_slack() >= -1e-12);
  }
}

TEST_CASE("width report edge cases") {
  GlobalConfig cfg;
  const auto o = ring(4);
  const auto spec = energy_spectrum(o, cfg, false);
  // Single occupied level: zero width, one distinct state.
  const auto r = width_report(energy_basis_state(o, 2), spec, 1, 4.0, {}, cfg);
  CHECK(r.bandwidth == 0.0);
  CHECK(r.min_bandwidth_states == 0.0);
  CHECK(r.min_bandwidth_pair == 0.0);
  CHECK(r.bandwidth_bound_holds);

  QuantumState empty{0, Basis::Energy, VectorXcd::Zero(4)};
  try {
    width_report(empty, spec, 4, 4.0);
    FAIL("expected EmptySupport");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySupport);
  }
  CHECK_THROWS_AS(width_report(energy_basis_state(o, 0), spec, 0, 4.0), Error);

  // Two levels far apart: bandwidth 3/T with only two distinct states needed.
  QuantumState two{0, Basis::Energy, VectorXcd::Zero(4)};
  two.amplitudes(0) = two.amplitudes(3) = std::sqrt(0.5);
  const auto w = width_report(two, spec, 2, 4.0, 2.0, cfg);
  CHECK(w.bandwidth == doctest::Approx(0.75));
  CHECK(w.min_bandwidth_pair == doctest::Approx(0.25));
  CHECK(w.first_moment_bound_holds);
}

TEST_CASE("first-moment bound on random orthogonal sequences") {
  // Uniform weights with random phases give N orthogonal states per period.
  Rng rng(47);
  GlobalConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(2, 50)(rng);
    const auto o = ring(n);
    const auto spec = energy_spectrum(o, cfg, false);
    QuantumState e{0, Basis::Energy, VectorXcd(n)};
    std::uniform_real_distribution<double> ph(0, 2 * oracle::pi);
    for (Index m = 0; m < n; ++m) e.amplitudes(m) = std::polar(1.0 / std::sqrt(double(n)), ph(rng));
    const double period = o.period(cfg.tau);
    // Orthogonality of the sequence at spacing tau.
    const auto a = to_config_basis(e);
    const auto b = evolve(a, cfg.tau, cfg);
    CHECK(std::abs(a.amplitudes.dot(b.amplitudes)) < 1e-10);
    const auto r = width_report(e, spec, n, period, cfg.tau, cfg);
    CHECK(r.first_moment_slack() >= -1e-10);
    CHECK(r.first_moment_bound_holds);
  }
}

TEST_CASE("second moment of the kernel state") {
  // Closed form of the sinc-limit integral: int_{-N/2}^{N/2} sin^2(pi x) / pi^2 dx.
  for (Index n : {10, 100, 1000}) {
    const double exact = (n / 2.0 - std::sin(oracle::pi * n) / (2 * oracle::pi)) / (oracle::pi * oracle::pi);
    CHECK(std::abs(second_moment(n) - exact) / exact < 1e-3);
  }
  CHECK(std::abs(second_moment(1000) - 1000 / (2 * oracle::pi * oracle::pi)) / 50.66 < 0.05);
  CHECK(std::abs(second_moment(2000) / second_moment(1000) - 2.0) < 0.1);

  // The exact periodic kernel gives a larger value by a factor near 2 ln 2.
  const double ratio = second_moment_periodic(1000) / second_moment(1000);
  CHECK(std::abs(ratio - 2 * std::log(2.0)) < 0.01);
  CHECK_THROWS_AS(second_moment(1), Error);

  // Gaussian reference: mean square deviation 1/(2 pi).
  const double var = oracle::simpson([](double u) { return u * u * unit_gaussian(u); }, -8, 8, 4000);
  CHECK(std::abs(var - 1 / (2 * oracle::pi)) < 1e-10);
}

TEST_CASE("figure data") {
  const auto rows = figure_data(100, 6.0, 1200);
  REQUIRE(rows.size() == 1201);
  CHECK(rows.front().u == -6.0);
  CHECK(rows.back().u == 6.0);
  CHECK(rows[600].u == 0.0);
  CHECK(rows[600].kernel_prob == 1.0);
  CHECK(rows[600].gaussian == 1.0);
  for (const auto& r : rows) {
    if (r.u == std::round(r.u) && r.u != 0.0) CHECK(r.kernel_prob < 1e-20);
    CHECK(r.gaussian == doctest::Approx(std::exp(-oracle::pi * r.u * r.u)));
  }
  // |S(100, 0.5)|^2 against the closed form 1 / (100 sin(pi/200))^2.
  const auto half = figure_data(100, 0.5, 1);
  CHECK(half.back().kernel_prob == doctest::Approx(1.0 / std::pow(100 * std::sin(oracle::pi / 200), 2)));
  CHECK_THROWS_AS(figure_data(1, 1.0, 10), Error);
  CHECK_THROWS_AS(figure_data(10, 0.0, 10), Error);
}

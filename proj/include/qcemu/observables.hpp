#ifndef QCEMU_OBSERVABLES_HPP
#define QCEMU_OBSERVABLES_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "qcemu/kernel.hpp"
#include "qcemu/spectral.hpp"

namespace qcemu {

template <typename Real>
Real average_energy(const BasicQuantumState<Real>& state, const BasicSpectrum<Real>& spectrum) {
  if (state.orbit_id != spectrum.orbit_id || state.size() != spectrum.size())
    throw Error(ErrorKind::OrbitMismatch, "state and spectrum belong to different orbits");
  const BasicQuantumState<Real> e =
      state.basis == Basis::Energy ? state : to_energy_basis(state);
  return e.amplitudes.cwiseAbs2().dot(spectrum.eigenvalues);
}

/// A single particle hopping around a ring of N sites of total length L at
/// speed v. Site spacing lambda = L/N, hop time tau = lambda/v.
struct ParticleModel {
  Index sites = 1;
  double length = 1.0;
  double speed = 1.0;

  double spacing() const noexcept { return length / static_cast<double>(sites); }
  double hop_time() const noexcept { return spacing() / speed; }

  void validate() const {
    if (sites < 1 || !(length > 0.0) || !(speed > 0.0))
      throw Error(ErrorKind::InvalidArgument, "particle model needs N >= 1, L > 0, v > 0");
  }
};

/// psi(x, t) = S(N, (x - v t) / lambda).
inline std::complex<double> particle_amplitude(const ParticleModel& model, double x, double t) {
  return periodic_sinc(model.sites, (x - model.speed * t) / model.spacing());
}

/// p = E / v = h / (2 lambda), the zero-point convention E = h nu / 2.
inline double momentum(const ParticleModel& model, const GlobalConfig& cfg) {
  return cfg.h / (2.0 * model.spacing());
}

struct WidthReport {
  double bandwidth = 0;            // B, highest minus lowest occupied frequency
  double mean_frequency = 0;       // nu_bar
  double lowest_frequency = 0;     // nu_0
  double first_moment_width = 0;   // 2 (nu_bar - nu_0)
  double min_bandwidth_states = 0; // (N - 1) / T
  double min_bandwidth_pair = 0;   // 1 / (2 tau_min)
  bool bandwidth_bound_holds = false;
  bool first_moment_bound_holds = false;

  double bandwidth_slack() const { return bandwidth - min_bandwidth_states; }
  double first_moment_slack() const {
    return first_moment_width - std::max(min_bandwidth_states, min_bandwidth_pair);
  }
};

/// Frequency-width summary of a state that passes through `num_distinct`
/// mutually orthogonal states per `period`. An energy level counts as
/// occupied when its probability exceeds `support_tol`. tau_min defaults to
/// period / num_distinct.
template <typename Real>
WidthReport width_report(const BasicQuantumState<Real>& state, const BasicSpectrum<Real>& spectrum,
                         Index num_distinct, double period, std::optional<double> tau_min = {},
                         const GlobalConfig& cfg = {}, double support_tol = 1e-20) {
  if (state.size() != spectrum.size())
    throw Error(ErrorKind::OrbitMismatch, "state and spectrum differ in length");
  if (num_distinct < 1 || !(period > 0.0))
    throw Error(ErrorKind::InvalidArgument, "width report needs N >= 1 and T > 0");
  const BasicQuantumState<Real> e =
      state.basis == Basis::Energy ? state : to_energy_basis(state);

  const VectorXr<Real> prob = e.amplitudes.cwiseAbs2();
  double lo = 0, hi = 0, mean = 0, mass = 0;
  bool any = false;
  for (Index m = 0; m < prob.size(); ++m) {
    if (!(static_cast<double>(prob(m)) > support_tol)) continue;
    const double nu = static_cast<double>(spectrum.eigenvalues(m)) / cfg.h;
    lo = any ? std::min(lo, nu) : nu;
    hi = any ? std::max(hi, nu) : nu;
    any = true;
    mean += static_cast<double>(prob(m)) * nu;
    mass += static_cast<double>(prob(m));
  }
  if (!any) throw Error(ErrorKind::EmptySupport, "state has no occupied energy level");

  WidthReport r;
  r.bandwidth = hi - lo;
  r.mean_frequency = mean / mass;
  r.lowest_frequency = lo;
  r.first_moment_width = 2.0 * (r.mean_frequency - r.lowest_frequency);
  r.min_bandwidth_states = static_cast<double>(num_distinct - 1) / period;
  const double tmin = tau_min.value_or(period / static_cast<double>(num_distinct));
  r.min_bandwidth_pair = num_distinct >= 2 ? 1.0 / (2.0 * tmin) : 0.0;
  const double tol = cfg.tolerance_rel * std::max(1.0, r.min_bandwidth_states);
  r.bandwidth_bound_holds = r.bandwidth_slack() >= -tol;
  r.first_moment_bound_holds = r.first_moment_slack() >= -tol;
  return r;
}

namespace detail {

// Midpoint rule on [a, b] with `points` cells.
template <typename F>
double midpoint(F&& f, double a, double b, Index points) {
  const double dx = (b - a) / static_cast<double>(points);
  double acc = 0;
  for (Index j = 0; j < points; ++j) acc += f(a + (static_cast<double>(j) + 0.5) * dx);
  return acc * dx;
}

}  // namespace detail

/// Default quadrature density for the second-moment integrals.
inline constexpr Index second_moment_points_per_unit = 16;

/// Mean square position deviation of the state centred at x_bar = N/2 over
/// one period [0, N), using the large-N sinc-limit amplitude. Grows as
/// N / (2 pi^2).
inline double second_moment(Index sites) {
  if (sites < 2) throw Error(ErrorKind::InvalidArgument, "second moment needs N >= 2");
  const double centre = static_cast<double>(sites) / 2.0;
  return detail::midpoint(
      [centre](double x) {
        const double d = x - centre;
        return d * d * std::norm(sinc_limit(d));
      },
      0.0, static_cast<double>(sites), second_moment_points_per_unit * sites);
}

/// Same integral with the exact periodic kernel |S(N, x - N/2)|^2. Larger
/// than second_moment by a factor approaching 2 ln 2, also linear in N.
inline double second_moment_periodic(Index sites) {
  if (sites < 2) throw Error(ErrorKind::InvalidArgument, "second moment needs N >= 2");
  const double centre = static_cast<double>(sites) / 2.0;
  return detail::midpoint(
      [sites, centre](double x) {
        const double d = x - centre;
        return d * d * std::norm(periodic_sinc(sites, d));
      },
      0.0, static_cast<double>(sites), second_moment_points_per_unit * sites);
}

/// Unit-height gaussian exp(-pi u^2), mean square deviation 1/(2 pi).
inline double unit_gaussian(double u) { return std::exp(-pi<double> * u * u); }

struct FigureRow {
  double u = 0;
  double kernel_prob = 0;
  double gaussian = 0;
};

/// |S(N,u)|^2 and exp(-pi u^2) at u_j = range (2j - samples) / samples,
/// j = 0..samples (samples + 1 points spanning [-range, range]).
inline std::vector<FigureRow> figure_data(Index sites, double range, Index samples) {
  if (sites < 2) throw Error(ErrorKind::InvalidArgument, "figure needs N >= 2");
  if (samples < 1 || !(range > 0.0))
    throw Error(ErrorKind::InvalidArgument, "figure needs samples >= 1 and range > 0");
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(samples + 1));
  for (Index j = 0; j <= samples; ++j) {
    const double u = range * static_cast<double>(2 * j - samples) / static_cast<double>(samples);
    rows.push_back({u, std::norm(periodic_sinc(sites, u)), unit_gaussian(u)});
  }
  return rows;
}

}  // namespace qcemu

#endif  // QCEMU_OBSERVABLES_HPP

#ifndef QCEMU_SPECTRAL_HPP
#define QCEMU_SPECTRAL_HPP

#include <cmath>
#include <complex>
#include <string>

#include "qcemu/dft.hpp"
#include "qcemu/dynamics.hpp"
#include "qcemu/kernel.hpp"
#include "qcemu/types.hpp"

namespace qcemu {

/// Largest orbit length for which unit-step matrices are materialized.
inline constexpr Index max_spectral_length = 4096;

enum class Basis { Configuration, Energy };

inline const char* to_string(Basis b) noexcept {
  return b == Basis::Configuration ? "configuration" : "energy";
}

/// Pure state of one orbit, stored in either the configuration basis
/// (index n) or the energy eigenbasis (index m).
template <typename Real>
struct BasicQuantumState {
  Index orbit_id = 0;
  Basis basis = Basis::Configuration;
  VectorXc<Real> amplitudes;

  Index size() const noexcept { return amplitudes.size(); }
  Real norm() const { return amplitudes.norm(); }
};

/// Energy levels m h / T_d of one orbit, optionally offset by h / (2 T_d).
template <typename Real>
struct BasicSpectrum {
  Index orbit_id = 0;
  VectorXr<Real> eigenvalues;
  bool zero_point_included = false;

  Index size() const noexcept { return eigenvalues.size(); }
};

/// Periodic function sum_j a_j exp(2 pi i (k + j) t / T), j = 0..N-1.
template <typename Real>
struct BasicBandlimitedFunction {
  VectorXc<Real> coefficients;
  Real period = 1;
  Index lowest_index = 0;

  Index bandwidth() const noexcept { return coefficients.size(); }

  std::complex<Real> operator()(Real t) const {
    std::complex<Real> acc(0);
    const Real x = t / period;
    for (Index j = 0; j < coefficients.size(); ++j) {
      const Real turns = std::remainder(static_cast<Real>(lowest_index + j) * x, Real(1));
      acc += coefficients(j) * std::polar(Real(1), 2 * pi<Real> * turns);
    }
    return acc;
  }

  /// Values at t = n T / N for n = 0..N-1, N = bandwidth().
  VectorXc<Real> samples() const { return samples(bandwidth()); }

  VectorXc<Real> samples(Index count) const {
    VectorXc<Real> out(count);
    for (Index n = 0; n < count; ++n)
      out(n) = (*this)(period * static_cast<Real>(n) / static_cast<Real>(count));
    return out;
  }
};

using QuantumState = BasicQuantumState<double>;
using Spectrum = BasicSpectrum<double>;
using BandlimitedFunction = BasicBandlimitedFunction<double>;

/// |<a|b>|, insensitive to global phase.
template <typename DerivedA, typename DerivedB>
auto fidelity(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return std::abs(a.dot(b));
}

template <typename Real = double>
BasicSpectrum<Real> energy_spectrum(const Orbit& orbit, const GlobalConfig& cfg, bool zero_point) {
  const Index n = orbit.size();
  const Real spacing = static_cast<Real>(cfg.h / orbit.period(cfg.tau));
  BasicSpectrum<Real> out{orbit.id, VectorXr<Real>(n), zero_point};
  const Real offset = zero_point ? spacing / 2 : Real(0);
  for (Index m = 0; m < n; ++m) out.eigenvalues(m) = static_cast<Real>(m) * spacing + offset;
  return out;
}

template <typename Real = double>
BasicQuantumState<Real> config_basis_state(const Orbit& orbit, Index n) {
  if (n < 0 || n >= orbit.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "configuration index " + std::to_string(n) + " outside orbit of length " +
                    std::to_string(orbit.size()));
  BasicQuantumState<Real> s{orbit.id, Basis::Configuration, VectorXc<Real>::Zero(orbit.size())};
  s.amplitudes(n) = Real(1);
  return s;
}

template <typename Real = double>
BasicQuantumState<Real> energy_basis_state(const Orbit& orbit, Index m) {
  if (m < 0 || m >= orbit.size())
    throw Error(ErrorKind::IndexOutOfRange, "energy index outside orbit");
  BasicQuantumState<Real> s{orbit.id, Basis::Energy, VectorXc<Real>::Zero(orbit.size())};
  s.amplitudes(m) = Real(1);
  return s;
}

template <typename Real>
BasicQuantumState<Real> to_energy_basis(const BasicQuantumState<Real>& state) {
  if (state.basis != Basis::Configuration)
    throw Error(ErrorKind::WrongBasis, "to_energy_basis expects a configuration-basis state");
  return {state.orbit_id, Basis::Energy, dft(state.amplitudes, DftDirection::Forward)};
}

template <typename Real>
BasicQuantumState<Real> to_config_basis(const BasicQuantumState<Real>& state) {
  if (state.basis != Basis::Energy)
    throw Error(ErrorKind::WrongBasis, "to_config_basis expects an energy-basis state");
  return {state.orbit_id, Basis::Configuration, dft(state.amplitudes, DftDirection::Inverse)};
}

/// Exact evolution by time t under the orbit Hamiltonian. Energy amplitude m
/// picks up exp(-2 pi i m t / T_d), plus a global phase exp(-i pi t / T_d)
/// when cfg.zero_point is set. The result is in the same basis as the input.
template <typename Real>
BasicQuantumState<Real> evolve(const BasicQuantumState<Real>& state, Real t, const GlobalConfig& cfg) {
  const bool in_config = state.basis == Basis::Configuration;
  BasicQuantumState<Real> e = in_config ? to_energy_basis(state) : state;

  const Index n = e.size();
  const auto len = static_cast<Real>(n);
  const Real steps = std::remainder(t / static_cast<Real>(cfg.tau), len);
  for (Index m = 0; m < n; ++m) {
    const Real turns = std::remainder(static_cast<Real>(m) * steps, len) / len;
    e.amplitudes(m) *= std::polar(Real(1), -2 * pi<Real> * turns);
  }
  if (cfg.zero_point) {
    const Real half_turns = std::remainder(t / static_cast<Real>(cfg.tau), 2 * len) / len;
    e.amplitudes *= std::polar(Real(1), -pi<Real> * half_turns);
  }
  return in_config ? to_config_basis(e) : e;
}

/// Matrix of the one-step evolution operator in the configuration basis.
template <typename Real = double>
MatrixXc<Real> unit_step(const Orbit& orbit, const GlobalConfig& cfg = {}) {
  const Index n = orbit.size();
  if (n > max_spectral_length) throw Error(ErrorKind::TooLarge, "unit_step limited to 4096 states");
  MatrixXc<Real> u(n, n);
  for (Index c = 0; c < n; ++c)
    u.col(c) = evolve(config_basis_state<Real>(orbit, c), static_cast<Real>(cfg.tau), cfg).amplitudes;
  return u;
}

/// Configuration amplitudes S(N_d, n - t/tau) of the state evolved from |0>.
template <typename Real = double>
VectorXc<Real> interpolate_config(const Orbit& orbit, Real t, const GlobalConfig& cfg = {}) {
  const Index n = orbit.size();
  const Real x = t / static_cast<Real>(cfg.tau);
  VectorXc<Real> out(n);
  for (Index k = 0; k < n; ++k) out(k) = periodic_sinc(n, static_cast<Real>(k) - x);
  return out;
}

/// Bandlimited reconstruction sum_n f(n tau) S_k(N, t/tau - n).
template <typename Derived>
auto reconstruct(const Eigen::MatrixBase<Derived>& samples, typename Derived::RealScalar t,
                 Index lowest_index, typename Derived::RealScalar tau = 1) {
  using Real = typename Derived::RealScalar;
  const Index n = samples.size();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "reconstruct needs at least one sample");
  const Real x = t / tau;
  std::complex<Real> acc(0);
  for (Index j = 0; j < n; ++j)
    acc += samples(j) * periodic_sinc_shifted(n, x - static_cast<Real>(j), lowest_index);
  return acc;
}

/// (1/N) sum_n f(n tau) g(n tau). Equals (1/T) * integral of f g over one
/// period when the band of g mirrors the band of f (k_f + k_g = 1 - N),
/// which covers every inner-product integrand f(t) conj(h(t)).
template <typename DerivedF, typename DerivedG>
auto bandlimited_product_sum(const Eigen::MatrixBase<DerivedF>& f, const Eigen::MatrixBase<DerivedG>& g) {
  using Real = typename DerivedF::RealScalar;
  if (f.size() != g.size())
    throw Error(ErrorKind::LengthMismatch, "product sum needs equal sample counts");
  if (f.size() == 0) throw Error(ErrorKind::InvalidArgument, "product sum needs samples");
  return std::complex<Real>(f.cwiseProduct(g).sum() / static_cast<Real>(f.size()));
}

/// Max-entry deviation from the identity of (N_d / G) sum_j |t_j><t_j|
/// with t_j = j N_d / G, in units of tau.
template <typename Real = double>
Real closure_defect(const Orbit& orbit, Index grid) {
  const Index n = orbit.size();
  if (grid < 2 * n) throw Error(ErrorKind::InvalidArgument, "closure grid must have at least 2 N_d points");
  MatrixXc<Real> acc = MatrixXc<Real>::Zero(n, n);
  const auto len = static_cast<Real>(n);
  for (Index j = 0; j < grid; ++j) {
    const Real t = len * static_cast<Real>(j) / static_cast<Real>(grid);
    const VectorXc<Real> v = interpolate_config<Real>(orbit, t);
    acc.noalias() += v * v.adjoint();
  }
  acc *= len / static_cast<Real>(grid);
  acc -= MatrixXc<Real>::Identity(n, n);
  return acc.cwiseAbs().maxCoeff();
}

/// |integral_0^{T_d} f(t) <t'|t> dt - f(t')|, time measured in units of tau.
/// The integrand is bandlimited, so a uniform 4 N_d point sum is exact.
template <typename Real>
Real dirac_defect(const Orbit& orbit, const BasicBandlimitedFunction<Real>& f, Real t_prime,
                  const GlobalConfig& cfg = {}) {
  const Index n = orbit.size();
  const auto len = static_cast<Real>(n);
  const auto tau = static_cast<Real>(cfg.tau);
  if (f.bandwidth() != n || f.lowest_index != 0 ||
      std::abs(f.period - len * tau) > Real(1e-12) * len * tau)
    throw Error(ErrorKind::BandwidthMismatch,
                "dirac_defect needs a function on frequencies 0..N_d-1 with period T_d");

  const Index grid = 4 * n;
  std::complex<Real> acc(0);
  for (Index j = 0; j < grid; ++j) {
    const Real x = len * static_cast<Real>(j) / static_cast<Real>(grid);
    acc += f(x * tau) * periodic_sinc(n, t_prime / tau - x);
  }
  acc *= len / static_cast<Real>(grid);
  return std::abs(acc - f(t_prime));
}

}  // namespace qcemu

#endif  // QCEMU_SPECTRAL_HPP

#ifndef QCEMU_OVERSAMPLE_HPP
#define QCEMU_OVERSAMPLE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qcemu/kernel.hpp"
#include "qcemu/spectral.hpp"

namespace qcemu {

/// Base orbit with M - 1 intermediate states inserted per update interval.
/// Extended state k is reached at time k/M (units of tau); the period T_d
/// is unchanged.
struct OversampledOrbit {
  Orbit base;
  Index factor = 1;

  Index base_length() const noexcept { return base.size(); }
  Index extended_length() const noexcept { return factor * base.size(); }

  /// The extended cycle as an orbit whose members are the labels k.
  Orbit extended_orbit() const {
    Orbit o{base.id, std::vector<State>(static_cast<std::size_t>(extended_length()))};
    std::iota(o.members.begin(), o.members.end(), State{0});
    return o;
  }

  /// Config for the extended dynamics: step time tau / M.
  GlobalConfig extended_config(const GlobalConfig& cfg) const {
    GlobalConfig out = cfg;
    out.tau = cfg.tau / static_cast<double>(factor);
    return out;
  }
};

inline OversampledOrbit oversample(const Orbit& orbit, Index factor) {
  if (factor < 1) throw Error(ErrorKind::InvalidArgument, "oversampling factor must be >= 1");
  if (factor * orbit.size() > max_spectral_length)
    throw Error(ErrorKind::TooLarge, "M * N_d limited to 4096");
  return {orbit, factor};
}

/// Basis state |n>_{N_d} of the oversampled dynamics, over the M N_d
/// extended configurations.
template <typename Real>
struct BasicBandlimitedBasisState {
  Index n = 0;
  BasicQuantumState<Real> state;
};

using BandlimitedBasisState = BasicBandlimitedBasisState<double>;

/// Built spectrally: uniform weight with phase exp(-2 pi i n m / N_d) on the
/// lowest N_d energy levels of H_M, then transformed to configurations.
template <typename Real = double>
BasicBandlimitedBasisState<Real> bandlimited_basis_state(const OversampledOrbit& ov, Index n) {
  const Index nd = ov.base_length();
  if (n < 0 || n >= nd) throw Error(ErrorKind::IndexOutOfRange, "bandlimited index outside orbit");

  BasicQuantumState<Real> e{ov.base.id, Basis::Energy, VectorXc<Real>::Zero(ov.extended_length())};
  const Real scale = Real(1) / std::sqrt(static_cast<Real>(nd));
  for (Index m = 0; m < nd; ++m) {
    const Index idx = (n * m) % nd;
    e.amplitudes(m) = scale * std::polar(Real(1), -2 * pi<Real> * static_cast<Real>(idx) /
                                                      static_cast<Real>(nd));
  }
  return {n, to_config_basis(e)};
}

/// (1/sqrt M) sum_k S(N_d, k/M - t) |k/M>, t in units of tau.
template <typename Real = double>
VectorXc<Real> bandlimited_evolve(const OversampledOrbit& ov, Real t) {
  const Index nd = ov.base_length();
  const Index m = ov.factor;
  const Real scale = Real(1) / std::sqrt(static_cast<Real>(m));
  VectorXc<Real> out(ov.extended_length());
  for (Index k = 0; k < out.size(); ++k)
    out(k) = scale * periodic_sinc(nd, static_cast<Real>(k) / static_cast<Real>(m) - t);
  return out;
}

/// The same state regrouped by offset class: row j holds the amplitudes at
/// times n + j/M for n = 0..N_d-1.
template <typename Real = double>
MatrixXc<Real> bandlimited_evolve_grouped(const OversampledOrbit& ov, Real t) {
  const Index nd = ov.base_length();
  const Index m = ov.factor;
  const Real scale = Real(1) / std::sqrt(static_cast<Real>(m));
  MatrixXc<Real> out(m, nd);
  for (Index j = 0; j < m; ++j)
    for (Index n = 0; n < nd; ++n)
      out(j, n) = scale * periodic_sinc(nd, static_cast<Real>(n * m + j) / static_cast<Real>(m) - t);
  return out;
}

/// Flattens a grouped matrix back to extended order k = n M + j.
template <typename Real>
VectorXc<Real> ungroup(const MatrixXc<Real>& grouped) {
  const Index m = grouped.rows();
  const Index nd = grouped.cols();
  VectorXc<Real> out(m * nd);
  for (Index j = 0; j < m; ++j)
    for (Index n = 0; n < nd; ++n) out(n * m + j) = grouped(j, n);
  return out;
}

/// |<psi(t')|psi(t)> - S(N_d, t' - t)| for the bandlimited evolution.
template <typename Real = double>
Real verify_isomorphism(const OversampledOrbit& ov, Real t, Real t_prime) {
  const VectorXc<Real> a = bandlimited_evolve(ov, t_prime);
  const VectorXc<Real> b = bandlimited_evolve(ov, t);
  return std::abs(a.dot(b) - periodic_sinc(ov.base_length(), t_prime - t));
}

/// sqrt(M) <k/M | psi(x)> grouped by offset: values(j, n) = S(N_d, n + j/M - x).
template <typename Real>
struct BasicLimitProfile {
  Index factor = 1;
  MatrixXc<Real> values;

  Real offset(Index j) const { return static_cast<Real>(j) / static_cast<Real>(factor); }

  /// Probability carried by offset class j in the normalized state.
  Real offset_weight(Index j) const {
    return values.row(j).squaredNorm() / static_cast<Real>(factor);
  }
};

using LimitProfile = BasicLimitProfile<double>;

template <typename Real = double>
std::vector<BasicLimitProfile<Real>> limit_superposition_profile(const Orbit& orbit,
                                                                 const std::vector<Index>& factors,
                                                                 Real x) {
  if (!(x >= 0 && x < static_cast<Real>(orbit.size())))
    throw Error(ErrorKind::InvalidArgument, "profile centre must lie in [0, N_d)");
  std::vector<BasicLimitProfile<Real>> out;
  out.reserve(factors.size());
  for (Index m : factors) {
    const OversampledOrbit ov = oversample(orbit, m);
    MatrixXc<Real> v = bandlimited_evolve_grouped(ov, x) * std::sqrt(static_cast<Real>(m));
    out.push_back({m, std::move(v)});
  }
  return out;
}

/// Sup-norm distance between two profiles read as step functions of the
/// offset u in [0, 1), compared on their common refinement.
template <typename Real>
Real profile_sup_difference(const BasicLimitProfile<Real>& a, const BasicLimitProfile<Real>& b) {
  if (a.values.cols() != b.values.cols())
    throw Error(ErrorKind::LengthMismatch, "profiles belong to different orbits");
  const Index fine = std::lcm(a.factor, b.factor);
  Real sup = 0;
  for (Index i = 0; i < fine; ++i) {
    const Index ja = i / (fine / a.factor);
    const Index jb = i / (fine / b.factor);
    sup = std::max(sup, (a.values.row(ja) - b.values.row(jb)).cwiseAbs().maxCoeff());
  }
  return sup;
}

}  // namespace qcemu

#endif  // QCEMU_OVERSAMPLE_HPP

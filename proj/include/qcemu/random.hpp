#ifndef QCEMU_RANDOM_HPP
#define QCEMU_RANDOM_HPP

#include <random>

#include "qcemu/spectral.hpp"

namespace qcemu {

using Rng = std::mt19937_64;

/// Normalized state with i.i.d. gaussian real and imaginary parts.
inline VectorXcd random_unit_vector(Rng& rng, Index n) {
  std::normal_distribution<double> g;
  VectorXcd v(n);
  for (Index i = 0; i < n; ++i) v(i) = {g(rng), g(rng)};
  return v / v.norm();
}

inline QuantumState random_state(Rng& rng, Index n, Basis basis = Basis::Configuration,
                                 Index orbit_id = 0) {
  return {orbit_id, basis, random_unit_vector(rng, n)};
}

/// Random function on frequencies k..k+N-1 (in units of 1/period) with
/// coefficients drawn uniformly from the unit square.
inline BandlimitedFunction random_bandlimited(Rng& rng, Index bandwidth, Index lowest_index,
                                              double period) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BandlimitedFunction f;
  f.coefficients.resize(bandwidth);
  for (Index j = 0; j < bandwidth; ++j) f.coefficients(j) = {u(rng), u(rng)};
  f.period = period;
  f.lowest_index = lowest_index;
  return f;
}

}  // namespace qcemu

#endif  // QCEMU_RANDOM_HPP

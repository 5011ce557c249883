#ifndef QCEMU_KERNEL_HPP
#define QCEMU_KERNEL_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "qcemu/types.hpp"

namespace qcemu {

/// Largest N accepted by kernel_direct_sum.
inline constexpr Index max_direct_sum_terms = 1'000'000;

namespace detail {

template <typename Real>
bool is_integer(Real u) {
  return std::isfinite(u) && std::abs(u) < Real(1) / std::numeric_limits<Real>::epsilon() &&
         std::floor(u) == u;
}

// sin(pi x) with exact reduction of x to [-1, 1].
template <typename Real>
Real sin_pi(Real x) {
  return std::sin(pi<Real> * std::remainder(x, Real(2)));
}

// exp(i pi x) with exact reduction of x to [-1, 1].
template <typename Real>
std::complex<Real> exp_i_pi(Real x) {
  return std::polar(Real(1), pi<Real> * std::remainder(x, Real(2)));
}

}  // namespace detail

/// Periodic sinc S(N,u) = (1/N) sum_{m=0}^{N-1} exp(2 pi i m u / N).
///
/// Evaluated in closed form after reducing u modulo N. At integer u the
/// result is exactly 1 (u = 0 mod N) or exactly 0, and near the removable
/// singularity the limiting value is used.
template <typename Real>
std::complex<Real> periodic_sinc(Index N, Real u) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "periodic_sinc needs N >= 1");
  const auto n = static_cast<Real>(N);
  if (detail::is_integer(u)) {
    return std::remainder(u, n) == Real(0) ? Real(1) : Real(0);
  }
  if (N == 1) return Real(1);

  const Real r = std::remainder(u, n);  // in [-N/2, N/2], exact
  // exp(i pi r (N-1)/N) split as exp(i pi r) * exp(-i pi r/N).
  const std::complex<Real> phase =
      detail::exp_i_pi(r) * std::polar(Real(1), -pi<Real> * r / n);
  const Real denom = std::sin(pi<Real> * r / n);
  if (std::abs(denom) < Real(1e-12)) return phase;
  return phase * (detail::sin_pi(r) / (n * denom));
}

/// Kernel with lowest frequency index k: exp(2 pi i k u / N) S(N,u).
template <typename Real>
std::complex<Real> periodic_sinc_shifted(Index N, Real u, Index k) {
  const std::complex<Real> s = periodic_sinc(N, u);
  if (k == 0 || s == std::complex<Real>(0)) return s;
  const Real r = std::remainder(u, static_cast<Real>(N));
  const Real turns = std::remainder(static_cast<Real>(k) * r / static_cast<Real>(N), Real(1));
  return std::polar(Real(1), 2 * pi<Real> * turns) * s;
}

/// Large-N limit exp(i pi u) sin(pi u)/(pi u), equal to 1 at u = 0.
template <typename Real>
std::complex<Real> sinc_limit(Real u) {
  if (u == Real(0)) return Real(1);
  if (detail::is_integer(u)) return Real(0);
  return detail::exp_i_pi(u) * (detail::sin_pi(u) / (pi<Real> * u));
}

/// Literal summation (1/N) sum_{m=k}^{k+N-1} exp(2 pi i m u / N).
/// Reference oracle for the closed forms above.
template <typename Real>
std::complex<Real> kernel_direct_sum(Index N, Real u, Index k = 0) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "kernel_direct_sum needs N >= 1");
  if (N > max_direct_sum_terms) throw Error(ErrorKind::TooLarge, "direct sum limited to 10^6 terms");
  std::complex<Real> acc(0);
  for (Index m = k; m < k + N; ++m)
    acc += std::polar(Real(1), 2 * pi<Real> * static_cast<Real>(m) * u / static_cast<Real>(N));
  return acc / static_cast<Real>(N);
}

}  // namespace qcemu

#endif  // QCEMU_KERNEL_HPP

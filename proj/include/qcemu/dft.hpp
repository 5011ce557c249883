#ifndef QCEMU_DFT_HPP
#define QCEMU_DFT_HPP

#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "qcemu/types.hpp"

namespace qcemu {

/// Sign of the exponent in a unitary DFT.
/// Forward maps configuration amplitudes to energy amplitudes.
enum class DftDirection { Forward = -1, Inverse = +1 };

/// Lengths at or above this use the FFT path in dft().
inline constexpr Index fast_dft_threshold = 64;

/// Unitary DFT by direct O(N^2) summation:
///   out[m] = N^{-1/2} sum_n exp(sign 2 pi i n m / N) in[n].
/// Twiddles are indexed by (n m mod N) so no phase argument exceeds 2 pi.
template <typename Derived>
VectorXc<typename Derived::RealScalar> dft_direct(const Eigen::MatrixBase<Derived>& in,
                                                  DftDirection dir) {
  using Real = typename Derived::RealScalar;
  const Index n = in.size();
  VectorXc<Real> out(n);
  if (n == 0) return out;

  const Real sign = dir == DftDirection::Forward ? Real(-1) : Real(1);
  std::vector<std::complex<Real>> twiddle(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j)
    twiddle[j] = std::polar(Real(1), sign * 2 * pi<Real> * static_cast<Real>(j) / static_cast<Real>(n));

  const Real scale = Real(1) / std::sqrt(static_cast<Real>(n));
  for (Index m = 0; m < n; ++m) {
    std::complex<Real> acc(0);
    Index idx = 0;
    for (Index k = 0; k < n; ++k) {
      acc += twiddle[idx] * in(k);
      idx += m;
      if (idx >= n) idx -= n;
    }
    out(m) = acc * scale;
  }
  return out;
}

/// Same transform as dft_direct, computed with Eigen's FFT module.
template <typename Derived>
VectorXc<typename Derived::RealScalar> dft_fast(const Eigen::MatrixBase<Derived>& in,
                                                DftDirection dir) {
  using Real = typename Derived::RealScalar;
  const Index n = in.size();
  VectorXc<Real> src = in;
  VectorXc<Real> out(n);
  // kissfft does not handle length 1; the transform is the identity there.
  if (n <= 1) return src;

  const std::vector<std::complex<Real>> buf(src.data(), src.data() + n);
  std::vector<std::complex<Real>> res;
  Eigen::FFT<Real> fft;
  const Real root_n = std::sqrt(static_cast<Real>(n));
  if (dir == DftDirection::Forward) {
    fft.fwd(res, buf);
    for (Index j = 0; j < n; ++j) out(j) = res[j] / root_n;
  } else {
    fft.inv(res, buf);
    for (Index j = 0; j < n; ++j) out(j) = res[j] * root_n;
  }
  return out;
}

template <typename Derived>
VectorXc<typename Derived::RealScalar> dft(const Eigen::MatrixBase<Derived>& in, DftDirection dir) {
  return in.size() >= fast_dft_threshold ? dft_fast(in, dir) : dft_direct(in, dir);
}

}  // namespace qcemu

#endif  // QCEMU_DFT_HPP

// Independent reference computations used only by the tests.
#ifndef QCEMU_TESTS_ORACLES_HPP
#define QCEMU_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

/// Lattice gas step simulated on explicit per-site occupation arrays.
inline unsigned lga_step(unsigned config, int sites, bool reflect) {
  std::vector<int> right(sites), left(sites), new_right(sites), new_left(sites);
  for (int s = 0; s < sites; ++s) {
    right[s] = (config >> (2 * s)) & 1;
    left[s] = (config >> (2 * s + 1)) & 1;
  }
  for (int s = 0; s < sites; ++s) {
    new_right[(s + 1) % sites] = right[s];
    new_left[(s - 1 + sites) % sites] = left[s];
  }
  if (reflect)
    for (int s = 0; s < sites; ++s)
      if (new_right[s] + new_left[s] == 1) std::swap(new_right[s], new_left[s]);
  unsigned out = 0;
  for (int s = 0; s < sites; ++s) out |= (unsigned(new_right[s]) << (2 * s)) | (unsigned(new_left[s]) << (2 * s + 1));
  return out;
}

/// Cycles of a permutation found by walking from every unvisited index.
inline std::vector<std::vector<unsigned>> cycles(const std::vector<unsigned>& image) {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(image.size(), false);
  for (unsigned s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::vector<unsigned> c;
    for (unsigned x = s; !seen[x]; x = image[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(c);
  }
  return out;
}

/// Explicit unitary Fourier matrix, entry (m, n) = exp(sign 2 pi i n m / N) / sqrt(N).
inline Eigen::MatrixXcd fourier_matrix(Eigen::Index n, int sign) {
  Eigen::MatrixXcd f(n, n);
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index k = 0; k < n; ++k)
      f(m, k) = std::exp(cd(0, sign * 2 * pi * double(k) * double(m) / double(n))) / std::sqrt(double(n));
  return f;
}

/// sum_j a_j exp(2 pi i (k + j) t / T).
inline cd fourier_series(const Eigen::VectorXcd& a, Eigen::Index k, double period, double t) {
  cd acc = 0;
  for (Eigen::Index j = 0; j < a.size(); ++j) acc += a(j) * std::exp(cd(0, 2 * pi * double(k + j) * t / period));
  return acc;
}

/// (1/N) sum_{n=k}^{k+N-1} exp(2 pi i n u / N), summed term by term in long double.
inline cd kernel_sum(long n, double u, long k = 0) {
  std::complex<long double> acc = 0;
  const long double tau_pi = 2.0L * std::numbers::pi_v<long double>;
  for (long j = k; j < k + n; ++j) {
    const long double phase = tau_pi * std::fmod(static_cast<long double>(j) * u, static_cast<long double>(n)) / n;
    acc += std::complex<long double>(std::cos(phase), std::sin(phase));
  }
  acc /= static_cast<long double>(n);
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// Composite Simpson rule on [a, b] with an even number of intervals.
template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

}  // namespace oracle

#endif  // QCEMU_TESTS_ORACLES_HPP

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcemu/kernel.hpp"

using namespace qcemu;
using cd = std::complex<double>;

TEST_CASE("periodic_sinc at integers is a Kronecker delta") {
  CHECK(periodic_sinc(5, 0.0) == cd(1.0));
  CHECK(periodic_sinc(5, 2.0) == cd(0.0));
  CHECK(periodic_sinc(5, 10.0) == cd(1.0));
  CHECK(periodic_sinc(5, -5.0) == cd(1.0));
  CHECK(periodic_sinc(1, 0.37) == cd(1.0));
  for (Index n = 1; n <= 40; ++n)
    for (Index u = -3 * n; u <= 3 * n; ++u) {
      const auto s = periodic_sinc(n, static_cast<double>(u));
      if (u % n == 0) CHECK(s == cd(1.0));
      else CHECK(std::abs(s) < 1e-12);
    }
}

TEST_CASE("periodic_sinc matches literal summation") {
  CHECK(std::abs(periodic_sinc(100, 0.5) - kernel_direct_sum(100, 0.5)) < 1e-12);
  // Hand summation: (1 + e^{i pi} + e^{2 pi i}) / 3.
  CHECK(std::abs(kernel_direct_sum(3, 1.5) - cd(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(periodic_sinc(3, 1.5) - cd(1.0 / 3.0)) < 1e-15);
  CHECK(std::abs(kernel_direct_sum(2, 1.0)) < 1e-15);
  CHECK(std::abs(kernel_direct_sum(7, 7.0) - 1.0) < 1e-14);

  std::mt19937_64 rng(7);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const Index n = std::uniform_int_distribution<Index>(1, 1024)(rng);
    const double u = std::uniform_real_distribution<double>(-2.0 * n, 2.0 * n)(rng);
    worst = std::max(worst, std::abs(periodic_sinc(n, u) - kernel_direct_sum(n, u)));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("removable singularity fallback") {
  // |sin(pi u / N)| < 1e-12 near u = 0 mod N but u not an integer.
  const double u = 1e-14;
  const auto s = periodic_sinc(10, u);
  CHECK(std::abs(s - kernel_direct_sum(10, u)) < 1e-13);
  const auto wrapped = periodic_sinc(10, 20.0 + 1e-13);
  CHECK(std::abs(wrapped - 1.0) < 1e-11);
}

TEST_CASE("periodic_sinc_shifted") {
  CHECK(periodic_sinc_shifted(5, 3.0, 0) == periodic_sinc(5, 3.0));
  CHECK(std::abs(periodic_sinc_shifted(4, 1.0, 2)) < 1e-15);
  CHECK(std::abs(periodic_sinc_shifted(8, 0.25, 3) - kernel_direct_sum(8, 0.25, 3)) < 1e-12);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Index n = std::uniform_int_distribution<Index>(1, 128)(rng);
    const Index k = std::uniform_int_distribution<Index>(-3 * n, 3 * n)(rng);
    const double u = std::uniform_real_distribution<double>(-2.0 * n, 2.0 * n)(rng);
    REQUIRE(std::abs(periodic_sinc_shifted(n, u, k) - kernel_direct_sum(n, u, k)) < 1e-11);
  }
}

TEST_CASE("sinc_limit") {
  CHECK(sinc_limit(0.0) == cd(1.0));
  CHECK(sinc_limit(1.0) == cd(0.0));
  CHECK(sinc_limit(-3.0) == cd(0.0));
  // e^{i pi/2} * 2/pi
  CHECK(std::abs(sinc_limit(0.5) - cd(0.0, 2.0 / oracle::pi)) < 1e-15);
  CHECK(std::abs(periodic_sinc(100000, 0.5) - sinc_limit(0.5)) < 1e-4);
  // Convergence is monotone in N at fixed u.
  CHECK(std::abs(periodic_sinc(1000, 0.5) - sinc_limit(0.5)) >
        std::abs(periodic_sinc(10000, 0.5) - sinc_limit(0.5)));
}

TEST_CASE("kernel_direct_sum limits") {
  CHECK_THROWS_AS(kernel_direct_sum(max_direct_sum_terms + 1, 0.5), Error);
  CHECK_THROWS_AS(kernel_direct_sum(0, 0.5), Error);
  CHECK_THROWS_AS(periodic_sinc(0, 0.5), Error);
}

TEST_CASE("kernel properties") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Index> pick_n(1, 256);
  for (int i = 0; i < 500; ++i) {
    const Index n = pick_n(rng);
    const double u = std::uniform_real_distribution<double>(-2.0 * n, 2.0 * n)(rng);
    const auto s = periodic_sinc(n, u);
    CHECK(std::abs(s) <= 1.0 + 1e-9);
    CHECK(std::abs(periodic_sinc(n, u + n) - s) < 1e-12);
    CHECK(std::abs(periodic_sinc(n, -u) - std::conj(s)) < 1e-12);

    const double t = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
    cd sum = 0;
    for (Index k = 0; k < n; ++k) sum += periodic_sinc(n, static_cast<double>(k) - t);
    CHECK(std::abs(sum - 1.0) < 1e-10);
  }
}

TEST_CASE("single precision instantiation") {
  const std::complex<float> s = periodic_sinc(16, 0.3f);
  const auto ref = periodic_sinc(16, 0.3);
  CHECK(std::abs(std::complex<double>(s) - ref) < 1e-5);
  CHECK(periodic_sinc(16, 3.0f) == std::complex<float>(0.0f));
}

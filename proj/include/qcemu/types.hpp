#ifndef QCEMU_TYPES_HPP
#define QCEMU_TYPES_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcemu {

using Index = Eigen::Index;

template <typename Real>
using VectorXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using MatrixXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using VectorXr = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using VectorXcd = VectorXc<double>;
using MatrixXcd = MatrixXc<double>;

template <typename Real>
inline constexpr Real pi = std::numbers::pi_v<Real>;

enum class ErrorKind {
  NotBijective,
  TooLarge,
  NoReturn,
  IndexOutOfRange,
  WrongBasis,
  LengthMismatch,
  BandwidthMismatch,
  OrbitMismatch,
  EmptySupport,
  InvalidArgument,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Run-wide physical units and numeric tolerances.
///
/// `tau` is the time between classical updates and `h` the unit of action.
/// `zero_point` adds h/(2 T_d) to every energy level of an orbit.
struct GlobalConfig {
  double tau = 1.0;
  double h = 1.0;
  double tolerance_abs = 1e-9;
  double tolerance_rel = 1e-10;
  std::uint64_t rng_seed = 42;
  bool zero_point = false;

  void validate() const;
};

}  // namespace qcemu

#endif  // QCEMU_TYPES_HPP

#include "qcemu/types.hpp"

namespace qcemu {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoReturn: return "NoReturn";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WrongBasis: return "WrongBasis";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BandwidthMismatch: return "BandwidthMismatch";
    case ErrorKind::OrbitMismatch: return "OrbitMismatch";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

void GlobalConfig::validate() const {
  if (!(tau > 0.0)) throw Error(ErrorKind::InvalidArgument, "tau must be positive");
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "h must be positive");
  if (!(tolerance_abs > 0.0) || !(tolerance_rel > 0.0))
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
}

}  // namespace qcemu

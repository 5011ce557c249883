#ifndef QCEMU_VERIFY_HPP
#define QCEMU_VERIFY_HPP

#include <string>
#include <vector>

#include "qcemu/dynamics.hpp"
#include "qcemu/io.hpp"
#include "qcemu/types.hpp"

namespace qcemu {

/// One verified identity: passes when defect <= tolerance.
struct Check {
  std::string module;
  std::string name;
  double defect = 0;
  double tolerance = 0;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_passed() const;
  Json to_json() const;
};

/// Names of every check run_verify performs on a valid input, in order.
const std::vector<std::string>& verify_check_names();

/// Runs every invariant of every module against `dyn` plus seeded
/// synthetic data. Module errors become failed checks.
VerificationReport run_verify(const ClassicalDynamics& dyn, const GlobalConfig& cfg);

/// Same, starting from a dynamics document. Invalid dynamics (not a
/// bijection, too large) produce a report with a single failed check.
/// Schema errors propagate as Error(Parse).
VerificationReport run_verify(const Json& dynamics_doc, const GlobalConfig& cfg);

}  // namespace qcemu

#endif  // QCEMU_VERIFY_HPP

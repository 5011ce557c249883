#ifndef QCEMU_CLI_HPP
#define QCEMU_CLI_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcemu/types.hpp"

namespace qcemu::cli {

enum class Subcommand { Orbits, Evolve, Interpolate, Energy, Uncertainty, Oversample, Limit, Figure, Verify };

enum ExitCode : int { Success = 0, VerificationFailed = 1, UsageFailure = 2, InputFailure = 3 };

enum class UsageErrorKind { UnknownSubcommand, BadFlag, MissingInput, HelpRequested };

class UsageError : public std::runtime_error {
public:
  UsageError(UsageErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  UsageErrorKind kind() const noexcept { return kind_; }

private:
  UsageErrorKind kind_;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Verify;
  std::string input_path;
  std::string output_path;  // empty: standard output
  GlobalConfig global;

  long long state = 0;                 // evolve, energy, uncertainty
  long long orbit = 0;                 // interpolate
  double t = 0.0;                      // evolve, interpolate
  long long sites = 100;               // figure, oversample, limit (--N)
  double range = 6.0;                  // figure
  long long samples = 1200;            // figure, oversample
  double x = 0.5;                      // limit
  std::vector<long long> factors{1, 2, 4, 8};  // oversample, limit (--M)
  std::optional<double> tau_min;       // uncertainty
};

const char* to_string(Subcommand s) noexcept;

/// Parses argv (argv[0] is the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Executes a parsed command, writing results to cfg.output_path.
/// Returns the process exit status.
int run(const RunConfig& cfg);

/// parse_args + run with errors mapped to exit statuses and messages on
/// stderr.
int main(const std::vector<std::string>& argv);

}  // namespace qcemu::cli

#endif  // QCEMU_CLI_HPP

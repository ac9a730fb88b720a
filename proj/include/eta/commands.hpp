#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eta/envelope.hpp"
#include "eta/scaling.hpp"

namespace eta {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitCapacity = 3,
  kExitCheckFailed = 4,
};

/// "5", "1,2,3" or "lo:hi[:step]" (inclusive).
std::vector<std::int64_t> parse_M_spec(const std::string& text);
/// "0.1,0.2" or "lo:hi:step" (inclusive, values lo + i*step).
std::vector<double> parse_n_grid(const std::string& text);
/// "lo:hi"
FitWindow parse_window(const std::string& text);

ResultEnvelope cmd_correlate(const RunConfig& cfg);
ResultEnvelope cmd_entropy(const RunConfig& cfg, const SweepOptions& opt = {});
ResultEnvelope cmd_rho(const RunConfig& cfg);
ResultEnvelope cmd_scaling(const RunConfig& cfg, const SweepOptions& opt = {});
ResultEnvelope cmd_kcurve(const RunConfig& cfg, const SweepOptions& opt = {});
ResultEnvelope cmd_figure(const RunConfig& cfg, const SweepOptions& opt = {});
ResultEnvelope cmd_oracle(const RunConfig& cfg);
ResultEnvelope cmd_eigencheck(const RunConfig& cfg);

/// Dispatches on cfg.command.
ResultEnvelope run_command(const RunConfig& cfg, const SweepOptions& opt = {});

/// Exit code implied by an envelope's checks.
int exit_code_for(const ResultEnvelope& env);

}  // namespace eta

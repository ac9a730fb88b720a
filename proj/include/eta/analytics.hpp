#pragma once

#include <cstdint>
#include <vector>

#include "eta/combinatorics.hpp"
#include "eta/spectrum.hpp"

namespace eta {

/// The state (eta^dagger)^N |vac> on L sites.
struct EtaStateSpec {
  std::int64_t L = 0;
  std::int64_t N = 0;

  EtaStateSpec() = default;
  EtaStateSpec(std::int64_t sites, std::int64_t pairs);

  ExactRational density() const { return ExactRational(N, L); }
  EtaStateSpec dual() const { return {L, L - N}; }
};

/// Thermodynamic limit at pair density n.
struct ThermoSpec {
  double n = 0.0;

  ThermoSpec() = default;
  explicit ThermoSpec(double density);

  ThermoSpec dual() const { return ThermoSpec(1.0 - n); }
};

struct ConcurrenceReport {
  double site_rest_concurrence = 0.0;  // 2 sqrt(det rho_1)
  double paper_quantity = 0.0;         // n (1 - n)
  double generalized_log = 0.0;        // ln prod_i f_M(n, i)
};

inline constexpr std::int64_t kMaxThermoBlock = 3000;

ExactInt state_norm(const EtaStateSpec& spec);

ExactRational odlro_pair(const EtaStateSpec& spec);

/// The M-pair correlator; exact 0 once M exceeds min(N, L-N).
ExactRational odlro_general(const EtaStateSpec& spec, std::int64_t M);

double odlro_thermo(const ThermoSpec& spec, std::int64_t M);

Spectrum rho_one(const EtaStateSpec& spec);

/// Binomial block spectrum f_M(n, i), i = 0..M.
Spectrum rho_block_thermo(const ThermoSpec& spec, std::int64_t M);

/// ln f_M(n, i), i = 0..M; -inf where the weight vanishes.
std::vector<double> block_log_weights(const ThermoSpec& spec, std::int64_t M);

/// Hypergeometric block spectrum C(M,i) C(L-M,N-i) / C(L,N), i = 0..M.
Spectrum rho_block_finite(const EtaStateSpec& spec, std::int64_t M);

double s_one(const ThermoSpec& spec);

double s_block(const ThermoSpec& spec, std::int64_t M);

ConcurrenceReport concurrence_report(const ThermoSpec& spec, std::int64_t M);

}  // namespace eta

#include "eta/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eta/errors.hpp"

namespace eta {

namespace {

void require_block(std::int64_t M) {
  if (M < 1) throw ValidationError("block size M must be >= 1");
  if (M > kMaxThermoBlock) {
    throw CapacityError("block size M=" + std::to_string(M) +
                        " exceeds supported maximum " +
                        std::to_string(kMaxThermoBlock));
  }
}

bool is_boundary(double n) { return n == 0.0 || n == 1.0; }

}  // namespace

EtaStateSpec::EtaStateSpec(std::int64_t sites, std::int64_t pairs)
    : L(sites), N(pairs) {
  if (L < 1) throw ValidationError("L must be positive");
  if (N < 0 || N > L) {
    throw ValidationError("N=" + std::to_string(N) + " outside [0, L=" +
                          std::to_string(L) + "]");
  }
}

ThermoSpec::ThermoSpec(double density) : n(density) {
  if (!(n >= 0.0 && n <= 1.0)) throw ValidationError("n must lie in [0, 1]");
}

ExactInt state_norm(const EtaStateSpec& spec) {
  return factorial(spec.N) * falling_factorial(spec.L, spec.N);
}

ExactRational odlro_pair(const EtaStateSpec& spec) {
  if (spec.L < 2) throw ValidationError("odlro_pair requires L >= 2");
  return ExactRational(ExactInt(spec.N * (spec.L - spec.N)),
                       ExactInt(spec.L * (spec.L - 1)));
}

ExactRational odlro_general(const EtaStateSpec& spec, std::int64_t M) {
  if (M < 1) throw ValidationError("odlro_general requires M >= 1");
  if (2 * M > spec.L) {
    throw ValidationError("odlro_general requires 2M <= L (M=" +
                          std::to_string(M) + ", L=" + std::to_string(spec.L) +
                          ")");
  }
  ExactInt num = falling_factorial(spec.N, M) *
                 falling_factorial(spec.L - spec.N, M);
  return ExactRational(num, falling_factorial(spec.L, 2 * M));
}

double odlro_thermo(const ThermoSpec& spec, std::int64_t M) {
  if (M < 1) throw ValidationError("odlro_thermo requires M >= 1");
  const double base = spec.n * (1.0 - spec.n);
  double r = 1.0;
  for (std::int64_t i = 0; i < M; ++i) r *= base;
  return r;
}

Spectrum rho_one(const EtaStateSpec& spec) {
  ExactRational filled = spec.density();
  return Spectrum::from_exact({{1 - filled, 0}, {filled, 1}});
}

std::vector<double> block_log_weights(const ThermoSpec& spec, std::int64_t M) {
  require_block(M);
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> lw(static_cast<std::size_t>(M + 1), ninf);
  if (spec.n == 0.0) {
    lw.front() = 0.0;
    return lw;
  }
  if (spec.n == 1.0) {
    lw.back() = 0.0;
    return lw;
  }
  const std::vector<double> lc = log_binom_row(M);
  const double ln_n = std::log(spec.n);
  const double ln_h = std::log1p(-spec.n);
  for (std::int64_t i = 0; i <= M; ++i) {
    lw[static_cast<std::size_t>(i)] =
        lc[static_cast<std::size_t>(i)] + static_cast<double>(i) * ln_n +
        static_cast<double>(M - i) * ln_h;
  }
  return lw;
}

Spectrum rho_block_thermo(const ThermoSpec& spec, std::int64_t M) {
  const std::vector<double> lw = block_log_weights(spec, M);
  std::vector<std::pair<double, int>> w;
  w.reserve(lw.size());
  for (std::size_t i = 0; i < lw.size(); ++i) {
    w.emplace_back(std::exp(lw[i]), static_cast<int>(i));
  }
  return Spectrum::from_values(std::move(w));
}

Spectrum rho_block_finite(const EtaStateSpec& spec, std::int64_t M) {
  if (M < 1 || M > spec.L) {
    throw ValidationError("rho_block_finite requires 1 <= M <= L");
  }
  const ExactInt total = binom_exact(spec.L, spec.N);
  std::vector<std::pair<ExactRational, int>> w;
  w.reserve(static_cast<std::size_t>(M + 1));
  for (std::int64_t i = 0; i <= M; ++i) {
    ExactInt ways = binom_exact(M, i) * binom_exact(spec.L - M, spec.N - i);
    w.emplace_back(ExactRational(ways, total), static_cast<int>(i));
  }
  return Spectrum::from_exact(std::move(w));
}

double s_one(const ThermoSpec& spec) {
  const double n = spec.n;
  double s = 0.0;
  if (n > 0.0) s -= n * std::log2(n);
  if (n < 1.0) s -= (1.0 - n) * std::log2(1.0 - n);
  return s;
}

double s_block(const ThermoSpec& spec, std::int64_t M) {
  require_block(M);
  if (is_boundary(spec.n)) return 0.0;
  // Log weights relative to the mode via the ratio w_{i+1}/w_i, then
  // S = ln Z - sum p_i r_i. Avoids the large cancellation in ln C(M,i).
  const double n = spec.n;
  const double h = 1.0 - n;
  const auto step = [&](std::int64_t i) {  // ln(w_{i+1} / w_i)
    const double a = static_cast<double>(i + 1);
    return std::log1p(std::fma(static_cast<double>(M + 1), n, -a) / (a * h));
  };
  const std::int64_t mode =
      std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor((M + 1) * n)), 0, M);
  std::vector<double> r(static_cast<std::size_t>(M + 1), 0.0);
  CompensatedSum up;
  for (std::int64_t i = mode; i < M; ++i) {
    up.add(step(i));
    r[static_cast<std::size_t>(i + 1)] = up.result();
  }
  CompensatedSum down;
  for (std::int64_t i = mode; i > 0; --i) {
    down.add(-step(i - 1));
    r[static_cast<std::size_t>(i - 1)] = down.result();
  }
  CompensatedSum z, zr;
  for (double ri : r) {
    const double w = std::exp(ri);
    z.add(w);
    zr.add(w * ri);
  }
  const double Z = z.result();
  return (std::log(Z) - zr.result() / Z) / std::numbers::ln2;
}

ConcurrenceReport concurrence_report(const ThermoSpec& spec, std::int64_t M) {
  require_block(M);
  ConcurrenceReport r;
  r.paper_quantity = odlro_thermo(spec, 1);
  r.site_rest_concurrence = 2.0 * std::sqrt(spec.n * (1.0 - spec.n));
  if (is_boundary(spec.n)) {
    r.generalized_log = -std::numeric_limits<double>::infinity();
    return r;
  }
  CompensatedSum s;
  for (double l : block_log_weights(spec, M)) s.add(l);
  r.generalized_log = s.result();
  return r;
}

}  // namespace eta

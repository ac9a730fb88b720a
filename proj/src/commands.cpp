#include "eta/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "eta/analytics.hpp"
#include "eta/density_matrix.hpp"
#include "eta/errors.hpp"
#include "eta/fermion.hpp"
#include "eta/format.hpp"
#include "eta/hubbard.hpp"
#include "eta/lattice.hpp"
#include "eta/pair_sector.hpp"

namespace eta {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("not an integer: '" + s + "'");
  }
  return v;
}

template <typename T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw ValidationError(std::string("missing required flag --") + flag);
  return *v;
}

ResultEnvelope envelope_for(const RunConfig& cfg) {
  ResultEnvelope env;
  env.config = cfg;
  return env;
}

EtaStateSpec state_from(const RunConfig& cfg) {
  return EtaStateSpec(require(cfg.L, "L"), require(cfg.N, "N"));
}

}  // namespace

std::vector<std::int64_t> parse_M_spec(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.find(':') != std::string::npos) {
    auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) {
      throw ValidationError("M range must be lo:hi[:step]");
    }
    const std::int64_t lo = parse_int(parts[0]);
    const std::int64_t hi = parse_int(parts[1]);
    const std::int64_t step = parts.size() == 3 ? parse_int(parts[2]) : 1;
    if (lo > hi) throw ValidationError("M range is empty");
    out = integer_range(lo, hi, step);
  } else {
    for (const auto& p : split(text, ',')) out.push_back(parse_int(p));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1) throw ValidationError("M values must be >= 1");
    if (i > 0 && out[i] <= out[i - 1]) {
      throw ValidationError("M values must strictly increase");
    }
  }
  return out;
}

std::vector<double> parse_n_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    auto parts = split(text, ':');
    if (parts.size() != 3) throw ValidationError("n grid range must be lo:hi:step");
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const double step = parse_real(parts[2]);
    if (!(step > 0.0) || lo > hi) throw ValidationError("bad n grid range");
    for (std::int64_t i = 0;; ++i) {
      const double v = lo + static_cast<double>(i) * step;
      if (v > hi + 1e-12) break;
      out.push_back(std::min(v, hi));
    }
  } else {
    for (const auto& p : split(text, ',')) out.push_back(parse_real(p));
  }
  for (double n : out) {
    if (!(n >= 0.0 && n <= 1.0)) throw ValidationError("n must lie in [0, 1]");
  }
  return out;
}

FitWindow parse_window(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 2) throw ValidationError("window must be lo:hi");
  FitWindow w{parse_int(parts[0]), parse_int(parts[1])};
  if (w.M_min < 1 || w.M_min > w.M_max) throw ValidationError("bad window");
  return w;
}

ResultEnvelope cmd_correlate(const RunConfig& cfg) {
  ResultEnvelope env = envelope_for(cfg);
  const EtaStateSpec spec = state_from(cfg);
  const auto Ms = parse_M_spec(cfg.M.value_or("1"));
  if (Ms.size() != 1) throw ValidationError("correlate takes a single M");
  const std::int64_t M = Ms.front();
  const ExactRational c = odlro_general(spec, M);
  env.add_text("C_M", format_rational(c), Source::closed_form);
  env.add_text("C_M_numerator", boost::multiprecision::numerator(c).str(),
               Source::closed_form);
  env.add_text("C_M_denominator", boost::multiprecision::denominator(c).str(),
               Source::closed_form);
  env.add_real("C_M_decimal", to_double(c), Source::closed_form);
  const ThermoSpec thermo(to_double(spec.density()));
  env.add_real("thermo_limit", odlro_thermo(thermo, M), Source::closed_form);
  if (spec.L <= 10) {
    const PairSectorVector psi =
        build_eta_state(static_cast<int>(spec.L), static_cast<int>(spec.N));
    const TupleReport r = site_independence_check(psi, static_cast<int>(M));
    const ExactRational oracle = r.tuples.front().lhs;
    env.add_text("oracle_C_M", format_rational(oracle), Source::oracle);
    env.add_flag("oracle_match", oracle == c && r.passed, Source::oracle);
    env.add_int("oracle_tuples", static_cast<std::int64_t>(r.tuples.size()),
                Source::oracle);
  }
  return env;
}

ResultEnvelope cmd_entropy(const RunConfig& cfg, const SweepOptions& opt) {
  ResultEnvelope env = envelope_for(cfg);
  const double n = require(cfg.n, "n");
  const EntropySeries s = entropy_sweep(n, parse_M_spec(cfg.M.value_or("1")), opt);
  Table t{"entropy", Source::closed_form, {"M", "S_M"}, {}, true};
  for (const auto& p : s.points) {
    t.rows.push_back({static_cast<double>(p.M), p.S});
  }
  env.tables.push_back(std::move(t));
  return env;
}

ResultEnvelope cmd_rho(const RunConfig& cfg) {
  ResultEnvelope env = envelope_for(cfg);
  const auto Ms = parse_M_spec(cfg.M.value_or("1"));
  if (Ms.size() != 1) throw ValidationError("rho takes a single M");
  const std::int64_t M = Ms.front();
  Table t{"spectrum", Source::closed_form, {"i", "weight"}, {}, true};
  Spectrum spec;
  if (cfg.L || cfg.N) {
    spec = rho_block_finite(state_from(cfg), M);
    for (const auto& e : spec.entries()) {
      env.add_text("weight_" + std::to_string(e.label), format_rational(e.exact),
                   Source::closed_form);
    }
  } else {
    spec = rho_block_thermo(ThermoSpec(require(cfg.n, "n")), M);
  }
  for (const auto& e : spec.entries()) {
    t.rows.push_back({static_cast<double>(e.label), e.value});
  }
  env.add_real("entropy_bits", entropy(spec), Source::closed_form);
  env.tables.push_back(std::move(t));
  return env;
}

ResultEnvelope cmd_scaling(const RunConfig& cfg, const SweepOptions& opt) {
  ResultEnvelope env = envelope_for(cfg);
  std::vector<double> ns;
  if (cfg.n_grid) {
    ns = parse_n_grid(*cfg.n_grid);
  } else {
    ns = {require(cfg.n, "n")};
  }
  const std::int64_t lo = cfg.M_min.value_or(100);
  const std::int64_t hi = cfg.M_max.value_or(3000);
  if (lo < 1 || lo > hi) throw ValidationError("bad M range");
  const FitWindow window = cfg.window ? parse_window(*cfg.window) : FitWindow{lo, hi};
  for (double n : ns) {
    if (n <= 0.0 || n >= 1.0) {
      throw ValidationError("scaling fit is degenerate at n=" + format_real(n) +
                            " (S_M = 0)");
    }
  }
  const auto Ms = integer_range(lo, hi);
  Table t{"scaling", Source::fit,
          {"n", "slope", "k", "rms_residual", "gaussian_k"}, {}};
  for (double n : ns) {
    const ScalingFit f = fit_scaling(entropy_sweep(n, Ms, opt), window);
    t.rows.push_back({n, f.slope, f.k, f.rms_residual, gaussian_k(n)});
  }
  env.tables.push_back(std::move(t));
  return env;
}

ResultEnvelope cmd_kcurve(const RunConfig& cfg, const SweepOptions& opt) {
  ResultEnvelope env = envelope_for(cfg);
  const std::vector<double> ns =
      cfg.n_grid ? parse_n_grid(*cfg.n_grid)
                 : (cfg.n ? std::vector<double>{*cfg.n} : kcurve_n_grid());
  const std::int64_t M_ref = cfg.M_ref.value_or(800);
  const FitWindow window = cfg.window ? parse_window(*cfg.window)
                                      : FitWindow{M_ref / 2, 2 * M_ref};
  const auto point = k_curve(ns, M_ref, opt);
  const auto fit = k_curve_fit(ns, window, opt);
  Table t{"kcurve", Source::closed_form, {"n", "k", "k_fit", "gaussian_k"}, {}};
  for (std::size_t i = 0; i < point.size(); ++i) {
    t.rows.push_back({point[i].n, point[i].k, fit[i].k, gaussian_k(point[i].n)});
  }
  env.tables.push_back(std::move(t));
  return env;
}

ResultEnvelope cmd_figure(const RunConfig& cfg, const SweepOptions& opt) {
  ResultEnvelope env = envelope_for(cfg);
  const int which = require(cfg.figure, "figure");
  Dataset d = figure_data(which, opt);
  env.tables.push_back({d.name, Source::closed_form, std::move(d.columns),
                        std::move(d.rows)});
  return env;
}

namespace {

using CheckFn = std::function<CheckResult(int L, int N, const RunConfig& cfg)>;

constexpr std::size_t kOracleTupleLimit = 2000;

CheckResult check_norm(int L, int N, const RunConfig&) {
  const ExactInt oracle = build_eta_state(L, N).norm2();
  const ExactInt closed = state_norm(EtaStateSpec(L, N));
  return {"norm", oracle == closed ? CheckResult::Status::pass
                                   : CheckResult::Status::fail,
          "oracle=" + oracle.str() + " closed=" + closed.str()};
}

CheckResult check_correlators(int L, int N, const RunConfig&) {
  const PairSectorVector psi = build_eta_state(L, N);
  CheckResult r{"correlators", CheckResult::Status::pass, ""};
  for (int M = 1; 2 * M <= L; ++M) {
    const TupleReport t = site_independence_check(psi, M, kOracleTupleLimit);
    const ExactRational closed = odlro_general(EtaStateSpec(L, N), M);
    const bool ok = t.passed && t.tuples.front().lhs == closed;
    if (!ok) r.status = CheckResult::Status::fail;
    r.detail += "M=" + std::to_string(M) + ":" + format_rational(closed) +
                (ok ? "" : "(mismatch)") + " ";
  }
  if (L < 2) r.status = CheckResult::Status::skipped;
  return r;
}

CheckResult check_partial_traces(int L, int N, const RunConfig&) {
  const PairSectorVector psi = build_eta_state(L, N);
  CheckResult r{"partial_traces", CheckResult::Status::pass, ""};
  for (int M = 1; M <= std::min(L, 4); ++M) {
    std::vector<std::vector<int>> choices(3);
    for (int t = 0; t < M; ++t) {
      choices[0].push_back(t);
      choices[1].push_back(L - M + t);
      choices[2].push_back((t * 2) % L);
    }
    std::sort(choices[2].begin(), choices[2].end());
    choices[2].erase(std::unique(choices[2].begin(), choices[2].end()),
                     choices[2].end());
    if (static_cast<int>(choices[2].size()) != M) choices.pop_back();
    const Spectrum closed = rho_block_finite(EtaStateSpec(L, N), M);
    const double s_closed = entropy(closed);
    double worst = 0.0;
    for (const auto& keep : choices) {
      const ExactDensityMatrix rho = partial_trace_exact(psi, keep);
      if (!(sector_spectrum(rho) == closed)) r.status = CheckResult::Status::fail;
      worst = std::max(worst, std::fabs(von_neumann(rho.to_float()) - s_closed));
    }
    if (worst > 1e-12) r.status = CheckResult::Status::fail;
    r.detail += "M=" + std::to_string(M) + ":S=" + format_real(s_closed) + " ";
  }
  return r;
}

CheckResult check_su2(int L, int, const RunConfig&) {
  const Su2Report rep = su2_check(L);
  return {"su2", rep.passed ? CheckResult::Status::pass : CheckResult::Status::fail,
          std::to_string(rep.checks.size()) + " operator identities on 4^" +
              std::to_string(L) + " states"};
}

CheckResult check_recursion(int L, int N, const RunConfig&) {
  if (N < 1 || L < 2) {
    return {"recursion", CheckResult::Status::skipped, "requires N >= 1, L >= 2"};
  }
  CheckResult r{"recursion", CheckResult::Status::pass, ""};
  for (int M = 1; 2 * M <= L; ++M) {
    const TupleReport t = recursion_identity_check(L, N, M, kOracleTupleLimit);
    if (!t.passed) r.status = CheckResult::Status::fail;
    r.detail += "M=" + std::to_string(M) + ":" +
                std::to_string(t.tuples.size()) + " tuples ";
  }
  return r;
}

CheckResult check_cross(int L, int N, const RunConfig&) {
  const PairSectorVector psi = build_eta_state(L, N);
  CheckResult r{"cross", CheckResult::Status::pass, ""};
  std::size_t count = 0;
  for (int M = 1; M < L; ++M) {
    for (int Mp = 1; M + Mp <= L; ++Mp) {
      if (M == Mp) continue;
      const TupleReport t = cross_correlator_check(psi, M, Mp, kOracleTupleLimit);
      if (!t.passed) r.status = CheckResult::Status::fail;
      count += t.tuples.size();
    }
  }
  r.detail = std::to_string(count) + " tuples, all zero";
  if (r.status == CheckResult::Status::fail) r.detail = "nonzero cross correlator";
  return r;
}

CheckResult check_wootters(int L, int N, const RunConfig&) {
  if (L < 2) return {"wootters", CheckResult::Status::skipped, "requires L >= 2"};
  const PairSectorVector psi = build_eta_state(L, N);
  const double conc = wootters_concurrence(partial_trace(psi, {0, 1}));
  // Two-site reduction is an X state: C = 2 |rho_{01,10}| - 2 sqrt(rho_00 rho_11).
  const Spectrum g = rho_block_finite(EtaStateSpec(L, N), 2);
  const double expected = std::max(
      0.0, g.value_of(1) - 2.0 * std::sqrt(g.value_of(0) * g.value_of(2)));
  const bool ok = std::fabs(conc - expected) <= 1e-12;
  return {"wootters", ok ? CheckResult::Status::pass : CheckResult::Status::fail,
          "pairwise_concurrence=" + format_real(conc) +
              " closed_form=" + format_real(expected)};
}

CheckResult check_eigencheck(int L, int N, const RunConfig& cfg) {
  if (L > kMaxFermionSites) {
    return {"eigencheck", CheckResult::Status::capacity,
            "chain of " + std::to_string(L) + " sites exceeds 4^" +
                std::to_string(kMaxFermionSites)};
  }
  const double U = cfg.U.value_or(4.0);
  const LatticeSpec chain({L}, Boundary::open);
  std::string detail;
  bool any = false;
  for (PairPhase ph : {PairPhase::uniform, PairPhase::staggered}) {
    const EigencheckResult e = hubbard_eigencheck(chain, N, U, ph);
    const bool ok = e.residual < 1e-10;
    any = any || ok;
    detail += std::string(to_string(ph)) + ":residual=" + format_real(e.residual) +
              ",E=" + format_real(e.energy) + (ok ? ",eigenstate " : " ");
  }
  return {"eigencheck", any ? CheckResult::Status::pass : CheckResult::Status::fail,
          detail};
}

const std::vector<std::pair<std::string, CheckFn>>& oracle_checks() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"norm", check_norm},
      {"correlators", check_correlators},
      {"partial_traces", check_partial_traces},
      {"su2", check_su2},
      {"recursion", check_recursion},
      {"cross", check_cross},
      {"wootters", check_wootters},
      {"eigencheck", check_eigencheck},
  };
  return checks;
}

}  // namespace

ResultEnvelope cmd_oracle(const RunConfig& cfg) {
  ResultEnvelope env = envelope_for(cfg);
  const EtaStateSpec spec = state_from(cfg);
  if (spec.L > PairSectorVector::kMaxSites) {
    throw CapacityError("oracle: L exceeds pair-sector budget");
  }
  const int L = static_cast<int>(spec.L);
  const int N = static_cast<int>(spec.N);
  std::vector<std::string> wanted;
  const std::string sel = cfg.checks.value_or("all");
  for (const auto& [name, fn] : oracle_checks()) {
    if (sel == "all") wanted.push_back(name);
  }
  if (sel != "all") {
    for (const auto& w : split(sel, ',')) {
      const bool known = std::any_of(
          oracle_checks().begin(), oracle_checks().end(),
          [&](const auto& c) { return c.first == w; });
      if (!known) throw ValidationError("unknown oracle check '" + w + "'");
      wanted.push_back(w);
    }
  }
  for (const auto& w : wanted) {
    for (const auto& [name, fn] : oracle_checks()) {
      if (name != w) continue;
      try {
        env.checks.push_back(fn(L, N, cfg));
      } catch (const CapacityError& e) {
        env.checks.push_back({name, CheckResult::Status::capacity, e.what()});
      }
    }
  }
  return env;
}

ResultEnvelope cmd_eigencheck(const RunConfig& cfg) {
  ResultEnvelope env = envelope_for(cfg);
  const LatticeSpec lattice = LatticeSpec::parse(cfg.lattice.value_or("2"));
  const int N = static_cast<int>(require(cfg.N, "N"));
  const double U = cfg.U.value_or(4.0);
  const std::string which = cfg.phase.value_or("both");
  std::vector<PairPhase> phases;
  if (which == "both") {
    phases = {PairPhase::uniform, PairPhase::staggered};
  } else {
    phases = {parse_phase(which)};
  }
  env.add_text("lattice", lattice.to_string(), Source::oracle);
  env.add_int("sites", lattice.sites(), Source::oracle);
  env.add_flag("bipartite", lattice.bipartite(), Source::oracle);
  env.add_real("predicted_energy", U * lattice.sites() / 4.0, Source::closed_form);
  std::string eigen_phases;
  for (PairPhase ph : phases) {
    if (ph == PairPhase::staggered && !lattice.bipartite() && phases.size() > 1) {
      continue;
    }
    const EigencheckResult e = hubbard_eigencheck(lattice, N, U, ph);
    const std::string tag = to_string(ph);
    env.add_real("residual_" + tag, e.residual, Source::oracle);
    env.add_real("energy_" + tag, e.energy, Source::oracle);
    if (e.residual < 1e-10) {
      if (!eigen_phases.empty()) eigen_phases += ' ';
      eigen_phases += tag;
    }
  }
  env.add_text("eigenstate_phase", eigen_phases.empty() ? "none" : eigen_phases,
               Source::oracle);
  env.checks.push_back({"eigenstate",
                        eigen_phases.empty() ? CheckResult::Status::fail
                                             : CheckResult::Status::pass,
                        "residual threshold 1e-10"});
  return env;
}

ResultEnvelope run_command(const RunConfig& cfg, const SweepOptions& opt) {
  const std::string& c = cfg.command;
  if (c == "correlate") return cmd_correlate(cfg);
  if (c == "entropy") return cmd_entropy(cfg, opt);
  if (c == "rho") return cmd_rho(cfg);
  if (c == "scaling") return cmd_scaling(cfg, opt);
  if (c == "kcurve") return cmd_kcurve(cfg, opt);
  if (c == "figure") return cmd_figure(cfg, opt);
  if (c == "oracle") return cmd_oracle(cfg);
  if (c == "eigencheck") return cmd_eigencheck(cfg);
  throw ValidationError("unknown command '" + c + "'");
}

int exit_code_for(const ResultEnvelope& env) {
  if (env.any_failed()) return kExitCheckFailed;
  if (env.any_capacity()) return kExitCapacity;
  return kExitOk;
}

}  // namespace eta

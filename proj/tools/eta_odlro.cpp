// Command-line front end: parses flags into a RunConfig, runs the command and
// writes the result envelope as CSV or JSON.

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "eta/commands.hpp"
#include "eta/envelope.hpp"
#include "eta/errors.hpp"

namespace {

struct Flags {
  std::int64_t L = 0, N = 0, M_min = 0, M_max = 0, M_ref = 0;
  double n = 0.0, U = 0.0;
  std::string M, n_grid, lattice, phase, window, checks, format = "csv", out;
  int figure = 0;
  unsigned threads = 0;
};

template <typename T>
std::optional<T> if_set(const CLI::App& app, const std::string& flag, const T& v) {
  if (app.count(flag) == 0) return std::nullopt;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed forms, brute-force oracles and scaling sweeps for the "
               "eta-pairing state of the Hubbard model"};
  app.require_subcommand(1);
  Flags f;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"correlate", "ODLRO correlator C_M for finite (L, N)"},
      {"entropy", "block entropy S_M(n) in bits for a value, list or range of M"},
      {"rho", "reduced block spectrum, finite (L, N) or thermodynamic n"},
      {"scaling", "least-squares fit of S_M against log2 M"},
      {"kcurve", "intercept k(n) at a reference block size"},
      {"figure", "dataset for figure 1, 2, 3 or 4"},
      {"oracle", "brute-force consistency checks on a small lattice"},
      {"eigencheck", "Hubbard eigenstate residual on a lattice"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--L", f.L, "total lattice sites");
    sub->add_option("--N", f.N, "number of eta pairs");
    sub->add_option("--M", f.M, "block size: value, list a,b,c or range lo:hi[:step]");
    sub->add_option("--n", f.n, "pair density");
    sub->add_option("--n-grid", f.n_grid, "densities: list or lo:hi:step");
    sub->add_option("--M-min", f.M_min, "smallest block size in a sweep");
    sub->add_option("--M-max", f.M_max, "largest block size in a sweep");
    sub->add_option("--M-ref", f.M_ref, "reference block size for k(n)");
    sub->add_option("--U", f.U, "Hubbard interaction");
    sub->add_option("--lattice", f.lattice, "e.g. 2, 2x2:periodic, 2x2x2:open");
    sub->add_option("--phase", f.phase, "uniform, staggered or both");
    sub->add_option("--window", f.window, "fit window lo:hi");
    sub->add_option("--checks", f.checks, "oracle checks, comma separated, or all");
    sub->add_option("--format", f.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", f.out, "output file (default stdout)");
    sub->add_option("--threads", f.threads,
                    "sweep workers (default ETA_ODLRO_THREADS or 1)");
    if (std::string(s.name) == "figure") {
      sub->add_option("which", f.figure, "figure number")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? eta::kExitOk : eta::kExitValidation;
  }

  const CLI::App* sub = app.get_subcommands().front();
  eta::RunConfig cfg;
  cfg.command = sub->get_name();
  cfg.L = if_set(*sub, "--L", f.L);
  cfg.N = if_set(*sub, "--N", f.N);
  cfg.M = if_set(*sub, "--M", f.M);
  cfg.n = if_set(*sub, "--n", f.n);
  cfg.n_grid = if_set(*sub, "--n-grid", f.n_grid);
  cfg.M_min = if_set(*sub, "--M-min", f.M_min);
  cfg.M_max = if_set(*sub, "--M-max", f.M_max);
  cfg.M_ref = if_set(*sub, "--M-ref", f.M_ref);
  cfg.U = if_set(*sub, "--U", f.U);
  cfg.lattice = if_set(*sub, "--lattice", f.lattice);
  cfg.phase = if_set(*sub, "--phase", f.phase);
  cfg.window = if_set(*sub, "--window", f.window);
  cfg.checks = if_set(*sub, "--checks", f.checks);
  if (cfg.command == "figure") cfg.figure = f.figure;
  cfg.format = f.format == "json" ? eta::OutputFormat::json : eta::OutputFormat::csv;
  cfg.out = if_set(*sub, "--out", f.out);

  try {
    const eta::ResultEnvelope env =
        eta::run_command(cfg, eta::SweepOptions{f.threads});
    const std::string text = eta::render(env);
    if (cfg.out) {
      eta::write_atomically(*cfg.out, text);
    } else {
      std::cout << text;
    }
    return eta::exit_code_for(env);
  } catch (const eta::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return eta::kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return eta::kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return eta::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return eta::kExitInternal;
  }
}

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace eta {

struct EntropyPoint {
  std::int64_t M = 0;
  double S = 0.0;  // bits
};

struct EntropySeries {
  double n = 0.0;
  std::vector<EntropyPoint> points;
};

struct FitWindow {
  std::int64_t M_min = 100;
  std::int64_t M_max = 3000;
};

struct ScalingFit {
  double slope = 0.0;
  double k = 0.0;  // intercept
  double rms_residual = 0.0;
  FitWindow window;
  std::size_t points = 0;
};

struct KPoint {
  double n = 0.0;
  double k = 0.0;
};

// Worker count for sweeps. 0 means "read ETA_ODLRO_THREADS, else 1".
struct SweepOptions {
  unsigned threads = 0;
};

unsigned resolve_threads(const SweepOptions& opt);

/// Runs fn(i) for i in [0, count) across workers; fn must write only its own
/// slot, which keeps results independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t count, const SweepOptions& opt, Fn&& fn);

/// Every integer from lo to hi inclusive.
std::vector<std::int64_t> integer_range(std::int64_t lo, std::int64_t hi,
                                        std::int64_t step = 1);

/// S_M(n) for each M, strictly increasing M.
EntropySeries entropy_sweep(double n, const std::vector<std::int64_t>& M_values,
                            const SweepOptions& opt = {});

/// Ordinary least squares of S_M against log2 M over points inside window.
ScalingFit fit_scaling(const EntropySeries& series, FitWindow window);

/// k(n) = S_{M_ref}(n) - log2(M_ref) / 2, sorted by n.
std::vector<KPoint> k_curve(const std::vector<double>& n_grid,
                            std::int64_t M_ref = 800,
                            const SweepOptions& opt = {});

/// Intercepts from windowed OLS fits, for comparison with k_curve.
std::vector<KPoint> k_curve_fit(const std::vector<double>& n_grid,
                                FitWindow window, const SweepOptions& opt = {});

/// Entropy of a Gaussian with the binomial variance n(1-n) M, minus the
/// log2(M)/2 term: log2(2 pi e n (1-n)) / 2. Analytic comparator only.
double gaussian_k(double n);

// Tabular dataset: one x column followed by named y columns.
struct Dataset {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 199 points i / 200, i = 1..199.
std::vector<double> figure_n_grid();
/// 100 points 0.005 i, i = 1..100.
std::vector<double> kcurve_n_grid();

/// which in {1, 2, 3, 4}.
Dataset figure_data(int which, const SweepOptions& opt = {});

}  // namespace eta

#include "eta/detail/parallel.hpp"

#include "eta/scaling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "eta/analytics.hpp"
#include "eta/combinatorics.hpp"
#include "eta/errors.hpp"

namespace eta {

unsigned resolve_threads(const SweepOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  if (const char* env = std::getenv("ETA_ODLRO_THREADS")) {
    unsigned v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end && v > 0) return v;
  }
  return 1;
}

std::vector<std::int64_t> integer_range(std::int64_t lo, std::int64_t hi,
                                        std::int64_t step) {
  if (step < 1) throw ValidationError("range step must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t m = lo; m <= hi; m += step) out.push_back(m);
  return out;
}

EntropySeries entropy_sweep(double n, const std::vector<std::int64_t>& M_values,
                            const SweepOptions& opt) {
  const ThermoSpec spec(n);
  for (std::size_t i = 0; i < M_values.size(); ++i) {
    if (M_values[i] < 1) throw ValidationError("entropy_sweep: M must be >= 1");
    if (M_values[i] > kMaxThermoBlock) {
      throw CapacityError("entropy_sweep: M=" + std::to_string(M_values[i]) +
                          " above " + std::to_string(kMaxThermoBlock));
    }
    if (i > 0 && M_values[i] <= M_values[i - 1]) {
      throw ValidationError("entropy_sweep: M values must strictly increase");
    }
  }
  EntropySeries series;
  series.n = n;
  series.points.resize(M_values.size());
  parallel_for(M_values.size(), opt, [&](std::size_t i) {
    series.points[i] = {M_values[i], s_block(spec, M_values[i])};
  });
  return series;
}

ScalingFit fit_scaling(const EntropySeries& series, FitWindow window) {
  if (series.n <= 0.0 || series.n >= 1.0) {
    throw ValidationError("fit_scaling: density n=" +
                          std::to_string(series.n) +
                          " gives S_M = 0; the fit is degenerate");
  }
  std::vector<double> xs, ys;
  for (const auto& p : series.points) {
    if (p.M < window.M_min || p.M > window.M_max) continue;
    xs.push_back(std::log2(static_cast<double>(p.M)));
    ys.push_back(p.S);
  }
  if (xs.size() < 5) {
    throw ValidationError("fit_scaling: fewer than 5 points inside window");
  }
  const double count = static_cast<double>(xs.size());
  CompensatedSum sx, sy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx.add(xs[i]);
    sy.add(ys[i]);
  }
  const double mx = sx.result() / count;
  const double my = sy.result() / count;
  CompensatedSum sxx, sxy, syy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx.add(dx * dx);
    sxy.add(dx * dy);
    syy.add(dy * dy);
  }
  if (sxx.result() == 0.0 || syy.result() == 0.0) {
    throw ValidationError("fit_scaling: degenerate data");
  }
  ScalingFit fit;
  fit.slope = sxy.result() / sxx.result();
  fit.k = my - fit.slope * mx;
  fit.window = window;
  fit.points = xs.size();
  CompensatedSum rss;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.k);
    rss.add(r * r);
  }
  fit.rms_residual = std::sqrt(rss.result() / count);
  return fit;
}

namespace {

void check_k_grid(const std::vector<double>& n_grid) {
  for (double n : n_grid) {
    if (!(n > 0.0 && n <= 0.5)) {
      throw ValidationError("k-curve densities must lie in (0, 0.5]");
    }
  }
}

std::vector<KPoint> sorted_by_n(std::vector<KPoint> out) {
  std::stable_sort(out.begin(), out.end(),
                   [](const KPoint& a, const KPoint& b) { return a.n < b.n; });
  return out;
}

}  // namespace

std::vector<KPoint> k_curve(const std::vector<double>& n_grid,
                            std::int64_t M_ref, const SweepOptions& opt) {
  check_k_grid(n_grid);
  std::vector<KPoint> out(n_grid.size());
  const double shift = 0.5 * std::log2(static_cast<double>(M_ref));
  parallel_for(n_grid.size(), opt, [&](std::size_t i) {
    out[i] = {n_grid[i], s_block(ThermoSpec(n_grid[i]), M_ref) - shift};
  });
  return sorted_by_n(std::move(out));
}

std::vector<KPoint> k_curve_fit(const std::vector<double>& n_grid,
                                FitWindow window, const SweepOptions& opt) {
  check_k_grid(n_grid);
  const auto Ms = integer_range(window.M_min, window.M_max);
  std::vector<KPoint> out(n_grid.size());
  parallel_for(n_grid.size(), opt, [&](std::size_t i) {
    const EntropySeries s = entropy_sweep(n_grid[i], Ms, SweepOptions{1});
    out[i] = {n_grid[i], fit_scaling(s, window).k};
  });
  return sorted_by_n(std::move(out));
}

double gaussian_k(double n) {
  return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * n *
                         (1.0 - n));
}

std::vector<double> figure_n_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 199; ++i) g.push_back(i / 200.0);
  return g;
}

std::vector<double> kcurve_n_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 100; ++i) g.push_back(i / 200.0);
  return g;
}

Dataset figure_data(int which, const SweepOptions& opt) {
  Dataset d;
  d.name = "figure" + std::to_string(which);
  std::vector<std::int64_t> Ms;
  switch (which) {
    case 1: {
      d.columns = {"n", "S1", "4C1"};
      for (double n : figure_n_grid()) {
        const ThermoSpec t(n);
        d.rows.push_back({n, s_one(t), 4.0 * odlro_thermo(t, 1)});
      }
      return d;
    }
    case 2:
      Ms = integer_range(1, 10);
      break;
    case 3:
      Ms = integer_range(10, 100, 10);
      break;
    case 4: {
      d.columns = {"n", "k"};
      for (const KPoint& p : k_curve(kcurve_n_grid(), 800, opt)) {
        d.rows.push_back({p.n, p.k});
      }
      return d;
    }
    default:
      throw ValidationError("figure must be 1, 2, 3 or 4");
  }
  d.columns = {"n"};
  for (auto M : Ms) d.columns.push_back("S_" + std::to_string(M));
  const std::vector<double> grid = figure_n_grid();
  d.rows.resize(grid.size());
  parallel_for(grid.size(), opt, [&](std::size_t i) {
    std::vector<double> row{grid[i]};
    for (auto M : Ms) row.push_back(s_block(ThermoSpec(grid[i]), M));
    d.rows[i] = std::move(row);
  });
  return d;
}

}  // namespace eta

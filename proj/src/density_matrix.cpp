#include "eta/density_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "eta/errors.hpp"

namespace eta {

DensityMatrix::DensityMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw ValidationError("DensityMatrix: matrix must be square and nonempty");
  }
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("DensityMatrix: matrix is not symmetric");
  }
  if (std::fabs(m_.trace() - 1.0) > 1e-12) {
    throw ValidationError("DensityMatrix: trace differs from 1");
  }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

ExactRational ExactDensityMatrix::trace() const {
  ExactRational t = 0;
  for (int i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

DensityMatrix ExactDensityMatrix::to_float() const {
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = to_double(at(r, c));
  }
  return DensityMatrix(std::move(m));
}

namespace {

void validate_keep(const PairSectorVector& psi, const std::vector<int>& keep,
                   int budget) {
  if (keep.empty()) throw ValidationError("partial_trace: no sites kept");
  if (static_cast<int>(keep.size()) > budget) {
    throw CapacityError("partial_trace: keeping " +
                        std::to_string(keep.size()) + " sites exceeds budget " +
                        std::to_string(budget));
  }
  std::set<int> seen;
  for (int s : keep) {
    if (s < 0 || s >= psi.sites() || !seen.insert(s).second) {
      throw ValidationError("partial_trace: invalid or repeated site " +
                            std::to_string(s));
    }
  }
}

// Splits every populated pattern into (environment pattern, kept index).
template <typename Amp, typename Convert>
std::map<std::uint32_t, std::vector<std::pair<int, Amp>>> group_by_env(
    const PairSectorVector& psi, const std::vector<int>& keep, Convert conv) {
  std::uint32_t keep_mask = 0;
  for (int s : keep) keep_mask |= 1u << s;
  std::map<std::uint32_t, std::vector<std::pair<int, Amp>>> groups;
  for (const auto& [p, a] : psi.amplitudes()) {
    int idx = 0;
    for (std::size_t t = 0; t < keep.size(); ++t) {
      if (p & (1u << keep[t])) idx |= 1 << t;
    }
    groups[p & ~keep_mask].emplace_back(idx, conv(a));
  }
  return groups;
}

}  // namespace

ExactDensityMatrix partial_trace_exact(const PairSectorVector& psi,
                                       const std::vector<int>& keep_sites) {
  validate_keep(psi, keep_sites, kMaxExactTraceSites);
  const ExactInt norm = psi.norm2();
  if (norm == 0) throw ValidationError("partial_trace: zero state");
  const int dim = 1 << keep_sites.size();
  std::vector<ExactInt> acc(static_cast<std::size_t>(dim * dim), 0);
  auto groups = group_by_env<ExactInt>(psi, keep_sites,
                                       [](const ExactInt& a) { return a; });
  for (const auto& [env, members] : groups) {
    for (const auto& [r, ar] : members) {
      for (const auto& [c, ac] : members) {
        acc[static_cast<std::size_t>(r * dim + c)] += ar * ac;
      }
    }
  }
  ExactDensityMatrix out;
  out.dim = dim;
  out.entries.reserve(acc.size());
  for (auto& v : acc) out.entries.emplace_back(v, norm);
  return out;
}

DensityMatrix partial_trace(const PairSectorVector& psi,
                            const std::vector<int>& keep_sites) {
  validate_keep(psi, keep_sites, kMaxTraceSites);
  const ExactInt norm = psi.norm2();
  if (norm == 0) throw ValidationError("partial_trace: zero state");
  const int dim = 1 << keep_sites.size();
  auto groups = group_by_env<double>(
      psi, keep_sites, [&norm](const ExactInt& a) {
        return std::sqrt(to_double(ExactRational(a * a, norm))) *
               (a < 0 ? -1.0 : 1.0);
      });
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [env, members] : groups) {
    for (const auto& [r, ar] : members) {
      for (const auto& [c, ac] : members) m(r, c) += ar * ac;
    }
  }
  return DensityMatrix(std::move(m));
}

Spectrum sector_spectrum(const ExactDensityMatrix& rho) {
  const int dim = rho.dim;
  std::map<int, std::vector<int>> sectors;
  for (int i = 0; i < dim; ++i) {
    sectors[std::popcount(static_cast<unsigned>(i))].push_back(i);
  }
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (std::popcount(static_cast<unsigned>(r)) !=
              std::popcount(static_cast<unsigned>(c)) &&
          rho.at(r, c) != 0) {
        throw ValidationError("sector_spectrum: coherence between sectors");
      }
    }
  }
  std::vector<std::pair<ExactRational, int>> w;
  for (const auto& [count, idx] : sectors) {
    ExactRational tr = 0;
    for (int i : idx) tr += rho.at(i, i);
    for (int a : idx) {
      for (int b : idx) {
        ExactRational sq = 0;
        for (int c : idx) sq += rho.at(a, c) * rho.at(c, b);
        if (sq != tr * rho.at(a, b)) {
          throw ValidationError("sector_spectrum: sector " +
                                std::to_string(count) + " block is not rank one");
        }
      }
    }
    w.emplace_back(tr, count);
  }
  return Spectrum::from_exact(std::move(w));
}

double von_neumann(const DensityMatrix& dm) {
  const Eigen::VectorXd ev = dm.eigenvalues();
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-9) {
      throw ValidationError("von_neumann: negative eigenvalue " +
                            std::to_string(ev(i)));
    }
    w.push_back(std::max(ev(i), 0.0));
  }
  return entropy_bits(w);
}

double wootters_concurrence(const DensityMatrix& dm) {
  if (dm.dim() != 4) {
    throw ValidationError("wootters_concurrence: expected a 4x4 matrix");
  }
  Eigen::Matrix4d yy;
  yy << 0, 0, 0, -1,
        0, 0, 1, 0,
        0, 1, 0, 0,
        -1, 0, 0, 0;
  const Eigen::Matrix4d rho = dm.matrix();
  // rho is real, so rho* = rho.
  const Eigen::Matrix4d tilde = yy * rho * yy;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
  const Eigen::Matrix4d sq =
      es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
      es.eigenvectors().transpose();
  // sqrt(rho) tilde sqrt(rho) is Hermitian and shares the spectrum of
  // rho tilde.
  const Eigen::Matrix4d h = sq * tilde * sq;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> hs(0.5 * (h + h.transpose()),
                                                    Eigen::EigenvaluesOnly);
  Eigen::Vector4d lam = hs.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + 4, std::greater<>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

}  // namespace eta

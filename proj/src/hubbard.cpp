#include "eta/hubbard.hpp"

#include <cmath>
#include <string>

#include "eta/combinatorics.hpp"
#include "eta/errors.hpp"

namespace eta {

const char* to_string(PairPhase p) {
  return p == PairPhase::uniform ? "uniform" : "staggered";
}

PairPhase parse_phase(const std::string& s) {
  if (s == "uniform") return PairPhase::uniform;
  if (s == "staggered") return PairPhase::staggered;
  throw ValidationError("unknown phase convention '" + s + "'");
}

FermiFockVector::FermiFockVector(int L) : L_(L) {
  if (L < 1) throw ValidationError("FermiFockVector: L must be positive");
  if (L > kMaxFermionSites) {
    throw CapacityError("FermiFockVector: 4^" + std::to_string(L) +
                        " exceeds dense budget 4^" +
                        std::to_string(kMaxFermionSites));
  }
  amp_.assign(std::size_t{1} << (2 * L), 0.0);
}

FermiFockVector FermiFockVector::vacuum(int L) {
  FermiFockVector v(L);
  v[0] = 1.0;
  return v;
}

double FermiFockVector::norm2() const { return dot(*this); }

double FermiFockVector::dot(const FermiFockVector& o) const {
  CompensatedSum s;
  for (std::size_t i = 0; i < amp_.size(); ++i) s.add(amp_[i] * o.amp_[i]);
  return s.result();
}

namespace {

// sum over sites of phase * c^dag_{j,down} c^dag_{j,up} applied to v.
FermiFockVector apply_pair_creation(const FermiFockVector& v,
                                    const std::vector<int>& phases) {
  FermiFockVector out(v.sites());
  const std::uint32_t dim = static_cast<std::uint32_t>(v.dim());
  for (std::uint32_t b = 0; b < dim; ++b) {
    const double a = v[b];
    if (a == 0.0) continue;
    for (int j = 0; j < v.sites(); ++j) {
      std::uint32_t s = b;
      double sign = 1.0;
      if (!apply_ladder({orbital(j, Spin::up), true}, s, sign)) continue;
      if (!apply_ladder({orbital(j, Spin::down), true}, s, sign)) continue;
      out[s] += phases[static_cast<std::size_t>(j)] * sign * a;
    }
  }
  return out;
}

}  // namespace

FermiFockVector build_fermi_eta_state(const LatticeSpec& lattice, int N,
                                      PairPhase phase) {
  const int L = lattice.sites();
  if (N < 0 || N > L) throw ValidationError("N outside [0, L]");
  if (phase == PairPhase::staggered && !lattice.bipartite()) {
    throw ValidationError("staggered phase requires a bipartite lattice");
  }
  std::vector<int> phases(static_cast<std::size_t>(L), 1);
  if (phase == PairPhase::staggered) {
    for (int j = 0; j < L; ++j) {
      phases[static_cast<std::size_t>(j)] = lattice.parity_sign(j);
    }
  }
  FermiFockVector v = FermiFockVector::vacuum(L);
  for (int step = 0; step < N; ++step) v = apply_pair_creation(v, phases);
  return v;
}

FermiFockVector apply_hubbard(const LatticeSpec& lattice, double U,
                              const FermiFockVector& v) {
  const int L = lattice.sites();
  if (v.sites() != L) throw ValidationError("apply_hubbard: size mismatch");
  FermiFockVector out(L);
  const std::uint32_t dim = static_cast<std::uint32_t>(v.dim());
  for (std::uint32_t b = 0; b < dim; ++b) {
    const double a = v[b];
    if (a == 0.0) continue;
    double diag = 0.0;
    for (int j = 0; j < L; ++j) {
      const double nu = (b >> orbital(j, Spin::up)) & 1u;
      const double nd = (b >> orbital(j, Spin::down)) & 1u;
      diag += (nu - 0.5) * (nd - 0.5);
    }
    out[b] += U * diag * a;
    for (auto [j, k] : lattice.edges()) {
      for (Spin s : {Spin::up, Spin::down}) {
        for (auto [to, from] : {std::pair{j, k}, std::pair{k, j}}) {
          std::uint32_t st = b;
          double sign = 1.0;
          if (!apply_ladder({orbital(from, s), false}, st, sign)) continue;
          if (!apply_ladder({orbital(to, s), true}, st, sign)) continue;
          out[st] -= sign * a;
        }
      }
    }
  }
  return out;
}

EigencheckResult hubbard_eigencheck(const LatticeSpec& lattice, int N, double U,
                                    PairPhase phase) {
  const FermiFockVector psi = build_fermi_eta_state(lattice, N, phase);
  const FermiFockVector hpsi = apply_hubbard(lattice, U, psi);
  EigencheckResult r;
  r.norm2 = psi.norm2();
  r.energy = psi.dot(hpsi) / r.norm2;
  CompensatedSum res;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    const double d = hpsi.data()[i] - r.energy * psi.data()[i];
    res.add(d * d);
  }
  r.residual = std::sqrt(res.result() / r.norm2);
  return r;
}

}  // namespace eta

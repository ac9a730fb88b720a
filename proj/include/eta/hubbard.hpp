#pragma once

#include <cstdint>
#include <vector>

#include "eta/fermion.hpp"
#include "eta/lattice.hpp"

namespace eta {

enum class PairPhase { uniform, staggered };

const char* to_string(PairPhase p);
PairPhase parse_phase(const std::string& s);

// Dense amplitude vector over the 4^L fermionic basis, indexed by the
// orbital occupation bits (see fermion.hpp for the ordering).
class FermiFockVector {
 public:
  explicit FermiFockVector(int L);

  static FermiFockVector vacuum(int L);

  int sites() const { return L_; }
  std::size_t dim() const { return amp_.size(); }
  double operator[](std::uint32_t b) const { return amp_[b]; }
  double& operator[](std::uint32_t b) { return amp_[b]; }
  const std::vector<double>& data() const { return amp_; }

  double norm2() const;
  double dot(const FermiFockVector& o) const;

 private:
  int L_;
  std::vector<double> amp_;
};

/// (sum_j phase_j eta^dagger_j)^N |vac> on the lattice's sites.
FermiFockVector build_fermi_eta_state(const LatticeSpec& lattice, int N,
                                      PairPhase phase);

/// Hubbard Hamiltonian with unit hopping
///   H = -sum_{sigma,<jk>} (c^dag_{j sigma} c_{k sigma} + h.c.)
///       + U sum_j (n_{j up} - 1/2)(n_{j down} - 1/2)
/// applied matrix-free.
FermiFockVector apply_hubbard(const LatticeSpec& lattice, double U,
                              const FermiFockVector& v);

struct EigencheckResult {
  double residual = 0.0;  // ||H psi - E psi|| / ||psi||
  double energy = 0.0;    // <psi|H|psi> / <psi|psi>
  double norm2 = 0.0;
};

EigencheckResult hubbard_eigencheck(const LatticeSpec& lattice, int N, double U,
                                    PairPhase phase);

}  // namespace eta

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eta {

// Fermionic Fock space of L sites with spin orbitals ordered site-major and
// up before down: orbital 2j is (j, up), orbital 2j+1 is (j, down). A basis
// state with occupied set S is prod_{p in S, ascending} c^dagger_p |vac>, so
// c^dagger_p picks up (-1)^{number of occupied orbitals below p}.

enum class Spin { up = 0, down = 1 };

inline constexpr int orbital(int site, Spin s) {
  return 2 * site + static_cast<int>(s);
}

inline constexpr int kMaxFermionSites = 8;

struct Ladder {
  int orbital = 0;
  bool dagger = false;
};

// Sparse combination of Fock basis states. Values are exact in double for
// every operator used here (integer and half-integer coefficients).
using FockTerms = std::map<std::uint32_t, double>;

// Sum of coefficient * (ordered product of ladder operators). Products are
// written left to right as in the operator expression and applied right to
// left.
class FermionOperator {
 public:
  struct Product {
    double coef = 1.0;
    std::vector<Ladder> ops;
  };

  FermionOperator() = default;
  static FermionOperator identity(double coef = 1.0);
  static FermionOperator product(std::vector<Ladder> ops, double coef = 1.0);

  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator operator*(const FermionOperator& o) const;
  FermionOperator scaled(double s) const;

  FockTerms apply(const FockTerms& v) const;
  const std::vector<Product>& terms() const { return terms_; }

 private:
  std::vector<Product> terms_;
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);
FermionOperator operator-(FermionOperator a, const FermionOperator& b);

/// Applies one ladder operator to a basis state. Returns false when it
/// annihilates the state.
bool apply_ladder(const Ladder& op, std::uint32_t& state, double& sign);

FermionOperator c_dag(int site, Spin s);
FermionOperator c(int site, Spin s);
FermionOperator number(int site, Spin s);
/// c^dagger_{j,down} c^dagger_{j,up}
FermionOperator eta_dag(int site);
/// c_{j,up} c_{j,down}
FermionOperator eta(int site);
/// -n_j / 2 + 1/2
FermionOperator eta_z(int site);

FermionOperator commutator(const FermionOperator& a, const FermionOperator& b);

/// True when lhs and rhs agree exactly on every basis state of L sites.
bool equal_on_fock_space(const FermionOperator& lhs, const FermionOperator& rhs,
                         int L);

struct IdentityCheck {
  std::string name;
  int site_a = 0;
  int site_b = 0;
  bool passed = false;
};

struct Su2Report {
  int L = 0;
  std::vector<IdentityCheck> checks;
  bool passed = true;
};

/// Per-site SU(2) relations, commutation of distinct sites, and Pauli
/// exclusion for (eta^dagger_j)^2, each verified on the full 4^L space.
Su2Report su2_check(int L);

}  // namespace eta

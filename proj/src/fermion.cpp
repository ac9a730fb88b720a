#include "eta/fermion.hpp"

#include <bit>
#include <cmath>

#include "eta/errors.hpp"

namespace eta {

FermionOperator FermionOperator::identity(double coef) {
  FermionOperator op;
  op.terms_.push_back({coef, {}});
  return op;
}

FermionOperator FermionOperator::product(std::vector<Ladder> ops, double coef) {
  FermionOperator op;
  op.terms_.push_back({coef, std::move(ops)});
  return op;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FermionOperator FermionOperator::operator*(const FermionOperator& o) const {
  FermionOperator out;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Product p{a.coef * b.coef, a.ops};
      p.ops.insert(p.ops.end(), b.ops.begin(), b.ops.end());
      out.terms_.push_back(std::move(p));
    }
  }
  return out;
}

FermionOperator FermionOperator::scaled(double s) const {
  FermionOperator out = *this;
  for (auto& t : out.terms_) t.coef *= s;
  return out;
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
  a += b;
  return a;
}

FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
  a += b.scaled(-1.0);
  return a;
}

bool apply_ladder(const Ladder& op, std::uint32_t& state, double& sign) {
  const std::uint32_t bit = 1u << op.orbital;
  const bool occupied = (state & bit) != 0;
  if (occupied == op.dagger) return false;
  if (std::popcount(state & (bit - 1u)) % 2 != 0) sign = -sign;
  state ^= bit;
  return true;
}

FockTerms FermionOperator::apply(const FockTerms& v) const {
  FockTerms out;
  for (const auto& [basis, amp] : v) {
    for (const auto& t : terms_) {
      std::uint32_t s = basis;
      double sign = 1.0;
      bool alive = true;
      for (auto it = t.ops.rbegin(); it != t.ops.rend() && alive; ++it) {
        alive = apply_ladder(*it, s, sign);
      }
      if (alive) out[s] += t.coef * sign * amp;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

FermionOperator c_dag(int site, Spin s) {
  return FermionOperator::product({{orbital(site, s), true}});
}

FermionOperator c(int site, Spin s) {
  return FermionOperator::product({{orbital(site, s), false}});
}

FermionOperator number(int site, Spin s) { return c_dag(site, s) * c(site, s); }

FermionOperator eta_dag(int site) {
  return c_dag(site, Spin::down) * c_dag(site, Spin::up);
}

FermionOperator eta(int site) { return c(site, Spin::up) * c(site, Spin::down); }

FermionOperator eta_z(int site) {
  return FermionOperator::identity(0.5) -
         (number(site, Spin::up) + number(site, Spin::down)).scaled(0.5);
}

FermionOperator commutator(const FermionOperator& a, const FermionOperator& b) {
  return a * b - b * a;
}

bool equal_on_fock_space(const FermionOperator& lhs, const FermionOperator& rhs,
                         int L) {
  if (L < 1 || L > kMaxFermionSites) {
    throw CapacityError("equal_on_fock_space: L outside [1, " +
                        std::to_string(kMaxFermionSites) + "]");
  }
  const std::uint32_t dim = 1u << (2 * L);
  for (std::uint32_t b = 0; b < dim; ++b) {
    const FockTerms basis{{b, 1.0}};
    if (lhs.apply(basis) != rhs.apply(basis)) return false;
  }
  return true;
}

Su2Report su2_check(int L) {
  if (L < 1 || L > kMaxFermionSites) {
    throw CapacityError("su2_check: L outside [1, " +
                        std::to_string(kMaxFermionSites) + "]");
  }
  Su2Report r;
  r.L = L;
  auto record = [&](std::string name, int a, int b, bool ok) {
    r.checks.push_back({std::move(name), a, b, ok});
    r.passed = r.passed && ok;
  };
  const FermionOperator zero;
  for (int j = 0; j < L; ++j) {
    record("[eta_j, eta_j^dag] = 2 eta_j^z", j, j,
           equal_on_fock_space(commutator(eta(j), eta_dag(j)),
                               eta_z(j).scaled(2.0), L));
    record("[eta_j^dag, eta_j^z] = eta_j^dag", j, j,
           equal_on_fock_space(commutator(eta_dag(j), eta_z(j)), eta_dag(j), L));
    record("[eta_j, eta_j^z] = -eta_j", j, j,
           equal_on_fock_space(commutator(eta(j), eta_z(j)),
                               eta(j).scaled(-1.0), L));
    record("(eta_j^dag)^2 = 0", j, j,
           equal_on_fock_space(eta_dag(j) * eta_dag(j), zero, L));
    for (int k = 0; k < L; ++k) {
      if (k == j) continue;
      record("[eta_j, eta_k] = 0", j, k,
             equal_on_fock_space(commutator(eta(j), eta(k)), zero, L));
      record("[eta_j, eta_k^dag] = 0", j, k,
             equal_on_fock_space(commutator(eta(j), eta_dag(k)), zero, L));
    }
  }
  return r;
}

}  // namespace eta

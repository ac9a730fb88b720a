#include "eta/pair_sector.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "eta/errors.hpp"

namespace eta {

namespace {

std::uint32_t full_mask(int L) {
  return L >= 32 ? ~0u : ((1u << L) - 1u);
}

void validate_sites(int L, const std::vector<int>& sites, const char* what) {
  std::set<int> seen;
  for (int s : sites) {
    if (s < 0 || s >= L) {
      throw ValidationError(std::string(what) + ": site " + std::to_string(s) +
                            " out of range");
    }
    if (!seen.insert(s).second) {
      throw ValidationError(std::string(what) + ": repeated site " +
                            std::to_string(s));
    }
  }
}

PairSectorVector lower_all(PairSectorVector v, const std::vector<int>& sites) {
  for (int s : sites) v = v.lower(s);
  return v;
}

// Ascending k-subsets of the sites in `pool`.
void subsets(const std::vector<int>& pool, int k, std::size_t start,
             std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PairSectorVector::PairSectorVector(int L) : L_(L) {
  if (L < 1) throw ValidationError("PairSectorVector: L must be positive");
  if (L > kMaxSites) {
    throw CapacityError("PairSectorVector: L=" + std::to_string(L) +
                        " exceeds budget of " + std::to_string(kMaxSites));
  }
}

PairSectorVector::PairSectorVector(int L, Amplitudes amps)
    : PairSectorVector(L) {
  for (auto& [p, a] : amps) {
    if ((p & ~full_mask(L)) != 0) {
      throw ValidationError("PairSectorVector: pattern outside lattice");
    }
    if (a != 0) amps_.emplace(p, std::move(a));
  }
}

PairSectorVector PairSectorVector::vacuum(int L) {
  return PairSectorVector(L, {{0u, ExactInt(1)}});
}

ExactInt PairSectorVector::amplitude(Pattern p) const {
  auto it = amps_.find(p);
  return it == amps_.end() ? ExactInt(0) : it->second;
}

void PairSectorVector::check_site(int j) const {
  if (j < 0 || j >= L_) {
    throw ValidationError("site " + std::to_string(j) + " out of range");
  }
}

PairSectorVector PairSectorVector::raise(int j) const {
  check_site(j);
  const Pattern bit = 1u << j;
  PairSectorVector out(L_);
  for (const auto& [p, a] : amps_) {
    if ((p & bit) == 0) out.amps_.emplace(p | bit, a);
  }
  return out;
}

PairSectorVector PairSectorVector::lower(int j) const {
  check_site(j);
  const Pattern bit = 1u << j;
  PairSectorVector out(L_);
  for (const auto& [p, a] : amps_) {
    if ((p & bit) != 0) out.amps_.emplace(p & ~bit, a);
  }
  return out;
}

PairSectorVector PairSectorVector::raise_sum(std::uint32_t site_mask) const {
  PairSectorVector out(L_);
  for (const auto& [p, a] : amps_) {
    for (int j = 0; j < L_; ++j) {
      const Pattern bit = 1u << j;
      if ((site_mask & bit) == 0 || (p & bit) != 0) continue;
      out.amps_[p | bit] += a;
    }
  }
  return out;
}

ExactInt PairSectorVector::norm2() const { return inner(*this, *this); }

PairSectorVector PairSectorVector::flipped() const {
  Amplitudes out;
  const Pattern mask = full_mask(L_);
  for (const auto& [p, a] : amps_) out.emplace(~p & mask, a);
  return PairSectorVector(L_, std::move(out));
}

ExactInt inner(const PairSectorVector& a, const PairSectorVector& b) {
  if (a.sites() != b.sites()) {
    throw ValidationError("inner: lattice size mismatch");
  }
  ExactInt s = 0;
  const auto& small = a.amplitudes().size() <= b.amplitudes().size()
                          ? a.amplitudes()
                          : b.amplitudes();
  const auto& large = &small == &a.amplitudes() ? b.amplitudes()
                                                : a.amplitudes();
  for (const auto& [p, x] : small) {
    auto it = large.find(p);
    if (it != large.end()) s += x * it->second;
  }
  return s;
}

PairSectorVector build_eta_state(int L, int N, std::uint32_t site_mask) {
  // More pairs than allowed sites is legal and yields the zero vector.
  PairSectorVector v = PairSectorVector::vacuum(L);
  if (N < 0) throw ValidationError("build_eta_state: N must be nonnegative");
  for (int step = 0; step < N; ++step) v = v.raise_sum(site_mask);
  return v;
}

PairSectorVector build_eta_state(int L, int N) {
  if (L > PairSectorVector::kMaxSites) {
    throw CapacityError("build_eta_state: L=" + std::to_string(L) +
                        " exceeds pair-sector budget");
  }
  if (N < 0 || N > L) {
    throw ValidationError("build_eta_state: N=" + std::to_string(N) +
                          " outside [0, L]");
  }
  return build_eta_state(L, N, full_mask(L));
}

ExactInt raw_correlator(const PairSectorVector& psi, const std::vector<int>& k,
                        const std::vector<int>& l) {
  validate_sites(psi.sites(), k, "correlator k_sites");
  validate_sites(psi.sites(), l, "correlator l_sites");
  // (prod eta^dagger_k)^dagger = prod eta_k since the eta_j commute.
  return inner(lower_all(psi, k), lower_all(psi, l));
}

ExactRational correlator(const PairSectorVector& psi,
                         const std::vector<int>& k, const std::vector<int>& l) {
  std::set<int> ks(k.begin(), k.end());
  for (int s : l) {
    if (ks.count(s) != 0) {
      throw ValidationError("correlator: k_sites and l_sites overlap at " +
                            std::to_string(s));
    }
  }
  const ExactInt norm = psi.norm2();
  if (norm == 0) throw ValidationError("correlator: zero state");
  return ExactRational(raw_correlator(psi, k, l), norm);
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> disjoint_tuples(
    int L, int M, int Mp, std::size_t limit) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  if (M < 0 || Mp < 0 || M + Mp > L) return out;
  std::vector<int> all(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) all[static_cast<std::size_t>(j)] = j;
  std::vector<std::vector<int>> ks;
  std::vector<int> cur;
  subsets(all, M, 0, cur, ks);
  for (const auto& k : ks) {
    std::vector<int> rest;
    for (int j = 0; j < L; ++j) {
      if (std::find(k.begin(), k.end(), j) == k.end()) rest.push_back(j);
    }
    std::vector<std::vector<int>> ls;
    subsets(rest, Mp, 0, cur, ls);
    for (auto& l : ls) {
      if (out.size() >= limit) return out;
      out.emplace_back(k, std::move(l));
    }
  }
  return out;
}

TupleReport cross_correlator_check(const PairSectorVector& psi, int M, int Mp,
                                   std::size_t limit) {
  if (M == Mp) throw ValidationError("cross_correlator_check requires M != M'");
  TupleReport r;
  for (auto& [k, l] : disjoint_tuples(psi.sites(), M, Mp, limit)) {
    ExactRational v = correlator(psi, k, l);
    if (v != 0) r.passed = false;
    r.tuples.push_back({k, l, v, 0});
  }
  return r;
}

TupleReport recursion_identity_check(int L, int N, int M,
                                     std::size_t limit) {
  if (M < 1) throw ValidationError("recursion_identity_check requires M >= 1");
  if (N < 1) throw ValidationError("recursion_identity_check requires N >= 1");
  if (2 * M > L) throw ValidationError("recursion_identity_check requires 2M <= L");
  const PairSectorVector psi = build_eta_state(L, N);
  TupleReport r;
  for (auto& [k, l] : disjoint_tuples(L, M, M, limit)) {
    ExactInt lhs = raw_correlator(psi, k, l);
    const std::uint32_t mask =
        full_mask(L) & ~((1u << k.front()) | (1u << l.front()));
    const PairSectorVector reduced = build_eta_state(L, N - 1, mask);
    std::vector<int> k2(k.begin() + 1, k.end());
    std::vector<int> l2(l.begin() + 1, l.end());
    ExactInt rhs = ExactInt(N) * ExactInt(N) * raw_correlator(reduced, k2, l2);
    if (lhs != rhs) r.passed = false;
    r.tuples.push_back({k, l, ExactRational(lhs), ExactRational(rhs)});
  }
  return r;
}

TupleReport site_independence_check(const PairSectorVector& psi, int M,
                                    std::size_t limit) {
  TupleReport r;
  for (auto& [k, l] : disjoint_tuples(psi.sites(), M, M, limit)) {
    ExactRational v = correlator(psi, k, l);
    const ExactRational ref = r.tuples.empty() ? v : r.tuples.front().lhs;
    if (v != ref) r.passed = false;
    r.tuples.push_back({k, l, v, ref});
  }
  return r;
}

}  // namespace eta

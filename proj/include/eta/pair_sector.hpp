#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "eta/combinatorics.hpp"

namespace eta {

// Brute-force representation of states inside the {empty, doubly occupied}
// sector. Bit j of a pattern is set when site j carries an eta pair; the
// basis state for a pattern is prod_{j in pattern} eta^dagger_j |vac>.
// eta operators on different sites commute, so no signs appear here.
class PairSectorVector {
 public:
  using Pattern = std::uint32_t;
  using Amplitudes = std::map<Pattern, ExactInt>;

  static constexpr int kMaxSites = 24;

  explicit PairSectorVector(int L);
  PairSectorVector(int L, Amplitudes amps);

  static PairSectorVector vacuum(int L);

  int sites() const { return L_; }
  const Amplitudes& amplitudes() const { return amps_; }
  ExactInt amplitude(Pattern p) const;

  /// eta^dagger_j |this>.
  PairSectorVector raise(int j) const;
  /// eta_j |this>.
  PairSectorVector lower(int j) const;
  /// sum_{j in sites} phase-free eta^dagger_j |this>.
  PairSectorVector raise_sum(std::uint32_t site_mask) const;

  ExactInt norm2() const;

  /// Exchange pairs and holes on every site.
  PairSectorVector flipped() const;

 private:
  void check_site(int j) const;

  int L_;
  Amplitudes amps_;
};

ExactInt inner(const PairSectorVector& a, const PairSectorVector& b);

/// (sum_{j in mask} eta^dagger_j)^N |vac>, built by repeated application.
PairSectorVector build_eta_state(int L, int N, std::uint32_t site_mask);
PairSectorVector build_eta_state(int L, int N);

/// <psi| prod eta^dagger_k prod eta_l |psi>, unnormalized.
ExactInt raw_correlator(const PairSectorVector& psi, const std::vector<int>& k,
                        const std::vector<int>& l);

/// Normalized correlator. k and l must each hold distinct in-range sites and
/// be disjoint; their lengths may differ.
ExactRational correlator(const PairSectorVector& psi,
                         const std::vector<int>& k, const std::vector<int>& l);

struct CheckedTuple {
  std::vector<int> k;
  std::vector<int> l;
  ExactRational lhs;
  ExactRational rhs;
};

struct TupleReport {
  std::vector<CheckedTuple> tuples;
  bool passed = true;
};

/// Every disjoint (k, l) with |k| = M, |l| = M' as ascending subsets, up to
/// `limit` choices.
std::vector<std::pair<std::vector<int>, std::vector<int>>> disjoint_tuples(
    int L, int M, int Mp, std::size_t limit = 200000);

/// Correlators with |k| != |l| vanish; lhs holds the value, rhs is 0.
TupleReport cross_correlator_check(const PairSectorVector& psi, int M, int Mp,
                                   std::size_t limit = 200000);

/// <Psi| eta^dagger_{k1..kM} eta_{l1..lM} |Psi> against
/// N^2 <Psi~| eta^dagger_{k2..kM} eta_{l2..lM} |Psi~>, where Psi~ uses
/// N-1 pairs on the sites other than k1 and l1.
TupleReport recursion_identity_check(int L, int N, int M,
                                     std::size_t limit = 200000);

/// Normalized correlator for every disjoint M-tuple; passes when all agree.
TupleReport site_independence_check(const PairSectorVector& psi, int M,
                                    std::size_t limit = 200000);

}  // namespace eta

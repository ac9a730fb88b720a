#pragma once

#include <vector>

#include "eta/combinatorics.hpp"

namespace eta {

enum class Representation { exact, floating };

// One eigenvalue of a reduced density operator. `label` is the pair count i
// of the symmetric sector state the weight belongs to. In exact mode both
// `exact` and `value` are populated; in floating mode only `value`.
struct SpectrumEntry {
  double value = 0.0;
  ExactRational exact = 0;
  int label = 0;
};

class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(Representation rep, std::vector<SpectrumEntry> entries);

  static Spectrum from_exact(std::vector<std::pair<ExactRational, int>> w);
  static Spectrum from_values(std::vector<std::pair<double, int>> w);

  Representation representation() const { return rep_; }
  bool is_exact() const { return rep_ == Representation::exact; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Weight carrying `label`, 0 if absent.
  double value_of(int label) const;
  ExactRational exact_of(int label) const;

  ExactRational exact_total() const;
  double total() const;

 private:
  Representation rep_ = Representation::floating;
  std::vector<SpectrumEntry> entries_;
};

bool operator==(const Spectrum& a, const Spectrum& b);

/// Von Neumann entropy in bits of a normalized spectrum, with 0 log 0 = 0.
/// Throws ValidationError if a floating spectrum deviates from unit total by
/// more than 1e-9, or an exact spectrum does not sum to exactly 1.
double entropy(const Spectrum& s);

/// Same, for raw weights (used by the density-matrix path).
double entropy_bits(const std::vector<double>& weights);

}  // namespace eta

#include "eta/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "eta/errors.hpp"

namespace eta {

Spectrum::Spectrum(Representation rep, std::vector<SpectrumEntry> entries)
    : rep_(rep), entries_(std::move(entries)) {
  std::set<int> labels;
  for (const auto& e : entries_) {
    if (!labels.insert(e.label).second) {
      throw ValidationError("Spectrum: duplicate label " +
                            std::to_string(e.label));
    }
    if (rep_ == Representation::exact ? e.exact < 0 : e.value < 0.0) {
      throw ValidationError("Spectrum: negative weight");
    }
  }
}

Spectrum Spectrum::from_exact(std::vector<std::pair<ExactRational, int>> w) {
  std::vector<SpectrumEntry> entries;
  entries.reserve(w.size());
  for (auto& [q, label] : w) {
    entries.push_back({to_double(q), q, label});
  }
  return Spectrum(Representation::exact, std::move(entries));
}

Spectrum Spectrum::from_values(std::vector<std::pair<double, int>> w) {
  std::vector<SpectrumEntry> entries;
  entries.reserve(w.size());
  for (auto& [v, label] : w) entries.push_back({v, 0, label});
  return Spectrum(Representation::floating, std::move(entries));
}

double Spectrum::value_of(int label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return e.value;
  }
  return 0.0;
}

ExactRational Spectrum::exact_of(int label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return e.exact;
  }
  return 0;
}

ExactRational Spectrum::exact_total() const {
  ExactRational t = 0;
  for (const auto& e : entries_) t += e.exact;
  return t;
}

double Spectrum::total() const {
  CompensatedSum s;
  for (const auto& e : entries_) s.add(e.value);
  return s.result();
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  if (a.representation() != b.representation() || a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.label != y.label) return false;
    if (a.is_exact() ? x.exact != y.exact : x.value != y.value) return false;
  }
  return true;
}

double entropy_bits(const std::vector<double>& weights) {
  CompensatedSum s;
  for (double w : weights) {
    if (w > 0.0) s.add(-w * std::log(w));
  }
  return s.result() / std::numbers::ln2;
}

double entropy(const Spectrum& s) {
  if (s.is_exact()) {
    if (s.exact_total() != 1) {
      throw ValidationError("entropy: exact spectrum is not normalized");
    }
  } else if (std::fabs(s.total() - 1.0) > 1e-9) {
    throw ValidationError("entropy: spectrum is not normalized");
  }
  std::vector<double> w;
  w.reserve(s.size());
  for (const auto& e : s.entries()) w.push_back(e.value);
  return entropy_bits(w);
}

}  // namespace eta

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eta {

enum class Boundary { open, periodic };

// Hypercubic lattice with row-major site numbering (last axis fastest).
class LatticeSpec {
 public:
  LatticeSpec(std::vector<int> dims, Boundary boundary);

  /// "4", "2x2", "2x2x2", optionally suffixed ":open" or ":periodic".
  static LatticeSpec parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& dims() const { return dims_; }
  Boundary boundary() const { return boundary_; }
  int sites() const { return sites_; }

  /// Undirected nearest-neighbour bonds (a < b), without duplicates.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> coordinates(int site) const;

  bool bipartite() const;
  /// (-1)^{sum of coordinates}.
  int parity_sign(int site) const;

 private:
  std::vector<int> dims_;
  Boundary boundary_;
  int sites_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace eta

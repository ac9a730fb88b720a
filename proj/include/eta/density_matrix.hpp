#pragma once

#include <vector>

#include <Eigen/Dense>

#include "eta/combinatorics.hpp"
#include "eta/pair_sector.hpp"
#include "eta/spectrum.hpp"

namespace eta {

// Real symmetric density matrix over a subsystem of pair qubits. Basis index
// bit t is the occupation of the t-th kept site.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXd m);

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXd& matrix() const { return m_; }

  /// Ascending eigenvalues.
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXd m_;
};

// Exact counterpart, row-major dim x dim.
struct ExactDensityMatrix {
  int dim = 0;
  std::vector<ExactRational> entries;

  const ExactRational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r * dim + c)];
  }
  ExactRational& at(int r, int c) {
    return entries[static_cast<std::size_t>(r * dim + c)];
  }
  ExactRational trace() const;
  DensityMatrix to_float() const;
};

inline constexpr int kMaxTraceSites = 12;
inline constexpr int kMaxExactTraceSites = 8;

ExactDensityMatrix partial_trace_exact(const PairSectorVector& psi,
                                       const std::vector<int>& keep_sites);

DensityMatrix partial_trace(const PairSectorVector& psi,
                            const std::vector<int>& keep_sites);

/// Spectrum of an exact reduced matrix grouped by pair-count sector. Requires
/// the matrix to be block diagonal in pair count with each block of rank at
/// most one (checked exactly via B^2 = tr(B) B); throws ValidationError
/// otherwise. Entry i carries tr(B_i).
Spectrum sector_spectrum(const ExactDensityMatrix& rho);

/// Entropy in bits; eigenvalues in (-1e-9, 0) are clipped to 0.
double von_neumann(const DensityMatrix& dm);

/// Two-qubit Wootters concurrence of a 4x4 density matrix.
double wootters_concurrence(const DensityMatrix& dm);

}  // namespace eta

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/conditional.hpp"
#include "core/state.hpp"

namespace qwtrap {

// Eigen-analysis of a square conditional operator. Pairs are sorted by
// descending |eigenvalue|; eigenvectors are embedded in the 2^n emitter
// space and re-orthonormalized within degenerate clusters.
struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<PureState> eigenvectors;
  std::vector<int> excitations;  // input excitation count of each pair's block
  std::vector<std::vector<int>> clusters;
  std::vector<int> unit_norm_indices;  // |lambda| >= 1 - unit_tol
  double cluster_tol = 1e-8;
  double unit_tol = 1e-8;

  int unit_multiplicity() const {
    return static_cast<int>(unit_norm_indices.size());
  }
  // Unit-magnitude eigenvalues whose eigenvector lives in the k-excitation
  // input subspace.
  int unit_multiplicity_in_excitation(int k) const;
};

SpectralReport spectrum(const ConditionalOperator& op, double cluster_tol = 1e-8,
                        double unit_tol = 1e-8);

}  // namespace qwtrap

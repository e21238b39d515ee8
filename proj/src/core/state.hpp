#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "core/basis.hpp"

namespace qwtrap {

// States live either on a conserved-quanta sector or on the bare 2^n
// emitter space (photon degree of freedom traced out / measured away).
struct StateBasis {
  enum class Kind { QubitOnly, Sector };
  Kind kind = Kind::QubitOnly;
  int n = 1;
  int quanta = 0;  // meaningful for Kind::Sector only

  static StateBasis qubit_only(int n) { return {Kind::QubitOnly, n, 0}; }
  static StateBasis sector(int n, int q) { return {Kind::Sector, n, q}; }
  Eigen::Index dim() const;
  bool operator==(const StateBasis& other) const;
};

struct PureState {
  StateBasis basis;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

struct DensityMatrix {
  StateBasis basis;
  Eigen::MatrixXcd matrix;

  double trace() const { return matrix.trace().real(); }
};

// Uniform single-excitation superposition over all n emitters.
PureState w1_state(int n);

// Uniform (n-1)-excitation superposition; the mirror of W1.
PureState w2_state(int n);

// Uniform two-excitation superposition, amplitude 1/sqrt(n(n-1)/2).
PureState phi_state(int n);

// (|1_i> - |1_j>)/sqrt(2): the pairwise dark state.
PureState singlet_state(int n, int i, int j);

// Computational basis state for the given occupation mask.
PureState computational_state(int n, std::uint32_t mask);

PureState vacuum_state(int n);

DensityMatrix maximally_mixed(int n);
DensityMatrix pure_density(const PureState& psi);

double fidelity(const PureState& state, const PureState& target);
double fidelity(const DensityMatrix& state, const PureState& target);

// Throws std::invalid_argument when the matrix is not Hermitian/trace-one/
// positive within the stated tolerances.
void validate_density(const DensityMatrix& rho, double hermitian_tol = 1e-12,
                      double trace_tol = 1e-12, double eigen_tol = 1e-10);

}  // namespace qwtrap

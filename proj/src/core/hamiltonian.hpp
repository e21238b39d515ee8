#pragma once

#include <Eigen/Dense>

#include "core/basis.hpp"
#include "core/state.hpp"

namespace qwtrap {

// Interaction Hamiltonian restricted to one conserved-quanta sector.
// Couples (mask, p) to (mask | bit m, p-1) with strength coupling*sqrt(p).
struct HermitianOperator {
  SectorBasis basis;
  Eigen::MatrixXcd matrix;
  double coupling = 1.0;
};

struct UnitaryOperator {
  SectorBasis basis;
  Eigen::MatrixXcd matrix;
  double theta = 0.0;  // dimensionless evolution time, theta = coupling * tau
};

HermitianOperator sector_hamiltonian(int n, int quanta, double coupling = 1.0);

// exp(-i H theta / coupling) via Hermitian eigendecomposition.
UnitaryOperator propagator(const HermitianOperator& h, double theta);

PureState evolve(const PureState& psi, const UnitaryOperator& u);
DensityMatrix evolve(const DensityMatrix& rho, const UnitaryOperator& u);

}  // namespace qwtrap

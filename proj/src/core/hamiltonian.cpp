#include "core/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qwtrap {

HermitianOperator sector_hamiltonian(int n, int quanta, double coupling) {
  SectorBasis basis(n, quanta);
  const int d = basis.size();
  if (d > kMaxDenseDim) {
    throw std::invalid_argument("sector dimension " + std::to_string(d) +
                                " exceeds dense solver bound " +
                                std::to_string(kMaxDenseDim));
  }
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  for (int col = 0; col < d; ++col) {
    const auto& el = basis.element(col);
    if (el.photons == 0) continue;
    const double amp = coupling * std::sqrt(static_cast<double>(el.photons));
    for (int m = 0; m < n; ++m) {
      if (el.mask & (1u << m)) continue;
      const int row = basis.index_of(el.mask | (1u << m));
      h(row, col) += amp;
      h(col, row) += amp;
    }
  }
  return {std::move(basis), std::move(h), coupling};
}

UnitaryOperator propagator(const HermitianOperator& h, double theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error(
        "Hermitian eigendecomposition failed to converge (sector n=" +
        std::to_string(h.basis.emitters()) +
        ", q=" + std::to_string(h.basis.quanta()) + ")");
  }
  const double t = theta / h.coupling;
  const Eigen::VectorXcd phases =
      (std::complex<double>(0.0, -t) * es.eigenvalues().array())
          .exp()
          .matrix();
  Eigen::MatrixXcd u = es.eigenvectors() * phases.asDiagonal() *
                       es.eigenvectors().adjoint();
  return {h.basis, std::move(u), theta};
}

PureState evolve(const PureState& psi, const UnitaryOperator& u) {
  const StateBasis expected =
      StateBasis::sector(u.basis.emitters(), u.basis.quanta());
  if (!(psi.basis == expected) || psi.amplitudes.size() != u.matrix.cols()) {
    throw std::invalid_argument("state basis does not match propagator sector");
  }
  return {psi.basis, u.matrix * psi.amplitudes};
}

DensityMatrix evolve(const DensityMatrix& rho, const UnitaryOperator& u) {
  const StateBasis expected =
      StateBasis::sector(u.basis.emitters(), u.basis.quanta());
  if (!(rho.basis == expected) || rho.matrix.rows() != u.matrix.cols()) {
    throw std::invalid_argument("state basis does not match propagator sector");
  }
  return {rho.basis, u.matrix * rho.matrix * u.matrix.adjoint()};
}

}  // namespace qwtrap

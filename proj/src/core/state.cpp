#include "core/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwtrap {

namespace {

void require_emitters(int n, int minimum) {
  if (n < minimum || n > kMaxEmitters) {
    throw std::invalid_argument("emitter count " + std::to_string(n) +
                                " outside [" + std::to_string(minimum) + ", " +
                                std::to_string(kMaxEmitters) + "]");
  }
}

void require_same_basis(const StateBasis& a, const StateBasis& b) {
  if (!(a == b)) {
    throw std::invalid_argument("states live on different bases");
  }
}

}  // namespace

Eigen::Index StateBasis::dim() const {
  if (kind == Kind::QubitOnly) return Eigen::Index{1} << n;
  return static_cast<Eigen::Index>(sector_size(n, quanta));
}

bool StateBasis::operator==(const StateBasis& other) const {
  if (kind != other.kind || n != other.n) return false;
  return kind == Kind::QubitOnly || quanta == other.quanta;
}

PureState w1_state(int n) {
  require_emitters(n, 2);
  PureState psi{StateBasis::qubit_only(n),
                Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m) psi.amplitudes[1ll << m] = a;
  return psi;
}

PureState w2_state(int n) {
  require_emitters(n, 2);
  PureState psi{StateBasis::qubit_only(n),
                Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  const std::uint32_t full = (n == 32) ? 0xffffffffu : (1u << n) - 1u;
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m) psi.amplitudes[full ^ (1u << m)] = a;
  return psi;
}

PureState phi_state(int n) {
  require_emitters(n, 2);
  PureState psi{StateBasis::qubit_only(n),
                Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  const double a = 1.0 / std::sqrt(pairs);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      psi.amplitudes[(1u << i) | (1u << j)] = a;
    }
  }
  return psi;
}

PureState singlet_state(int n, int i, int j) {
  require_emitters(n, 2);
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("singlet indices must be distinct and < n");
  }
  PureState psi{StateBasis::qubit_only(n),
                Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  const double a = 1.0 / std::sqrt(2.0);
  psi.amplitudes[1u << i] = a;
  psi.amplitudes[1u << j] = -a;
  return psi;
}

PureState computational_state(int n, std::uint32_t mask) {
  require_emitters(n, 1);
  const std::uint32_t full = (n == 32) ? 0xffffffffu : (1u << n) - 1u;
  if (mask & ~full) {
    throw std::invalid_argument("occupation mask has bits above position n-1");
  }
  PureState psi{StateBasis::qubit_only(n),
                Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  psi.amplitudes[mask] = 1.0;
  return psi;
}

PureState vacuum_state(int n) { return computational_state(n, 0); }

DensityMatrix maximally_mixed(int n) {
  require_emitters(n, 1);
  const Eigen::Index d = Eigen::Index{1} << n;
  DensityMatrix rho{StateBasis::qubit_only(n), Eigen::MatrixXcd::Identity(d, d)};
  rho.matrix /= static_cast<double>(d);
  return rho;
}

DensityMatrix pure_density(const PureState& psi) {
  return {psi.basis, psi.amplitudes * psi.amplitudes.adjoint()};
}

double fidelity(const PureState& state, const PureState& target) {
  require_same_basis(state.basis, target.basis);
  const double overlap = std::norm(target.amplitudes.dot(state.amplitudes));
  return std::clamp(overlap, 0.0, 1.0);
}

double fidelity(const DensityMatrix& state, const PureState& target) {
  require_same_basis(state.basis, target.basis);
  const std::complex<double> v =
      target.amplitudes.dot(state.matrix * target.amplitudes);
  return std::clamp(v.real(), 0.0, 1.0);
}

void validate_density(const DensityMatrix& rho, double hermitian_tol,
                      double trace_tol, double eigen_tol) {
  if (rho.matrix.rows() != rho.matrix.cols() ||
      rho.matrix.rows() != rho.basis.dim()) {
    throw std::invalid_argument("density matrix dimension does not match basis");
  }
  const double herm = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > hermitian_tol) {
    throw std::invalid_argument("density matrix not Hermitian, defect " +
                                std::to_string(herm));
  }
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    throw std::invalid_argument("density matrix trace " + std::to_string(tr) +
                                " differs from one");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix,
                                                     Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigen check of density matrix failed to converge");
  }
  if (es.eigenvalues().minCoeff() < -eigen_tol) {
    throw std::invalid_argument("density matrix has eigenvalue below -tol: " +
                                std::to_string(es.eigenvalues().minCoeff()));
  }
}

}  // namespace qwtrap

#include "core/conditional.hpp"

#include <stdexcept>
#include <string>

#include "core/hamiltonian.hpp"

namespace qwtrap {

struct ConditionalOperator::Cache {
  std::mutex mutex;
  std::vector<std::optional<Eigen::MatrixXcd>> blocks;
};

ConditionalOperator::ConditionalOperator(int n, int p_in, int p_out,
                                         double theta)
    : n_(n), p_in_(p_in), p_out_(p_out), theta_(theta),
      cache_(std::make_shared<Cache>()) {
  if (n < 1 || n > kMaxEmitters) {
    throw std::invalid_argument("emitter count out of range");
  }
  if (p_in < 0 || p_out < 0) {
    throw std::invalid_argument("photon counts must be non-negative");
  }
  cache_->blocks.resize(static_cast<std::size_t>(n) + 1);
}

const Eigen::MatrixXcd& ConditionalOperator::block(int k) const {
  if (!has_block(k)) {
    throw std::invalid_argument("no block for excitation count " +
                                std::to_string(k));
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->blocks[static_cast<std::size_t>(k)];
  if (!slot) {
    const UnitaryOperator u =
        propagator(sector_hamiltonian(n_, k + p_in_), theta_);
    const std::vector<int> cols = u.basis.indices_with_photons(p_in_);
    const std::vector<int> rows = u.basis.indices_with_photons(p_out_);
    slot = u.matrix(rows, cols);
  }
  return *slot;
}

Eigen::VectorXcd ConditionalOperator::apply(const Eigen::VectorXcd& psi) const {
  if (psi.size() != (Eigen::Index{1} << n_)) {
    throw std::invalid_argument("state dimension does not match 2^n");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  for (int k = 0; k <= n_; ++k) {
    if (!has_block(k)) continue;
    const auto in_masks = masks_with_popcount(n_, k);
    const auto out_masks = masks_with_popcount(n_, output_excitation(k));
    Eigen::VectorXcd sub(static_cast<Eigen::Index>(in_masks.size()));
    for (std::size_t i = 0; i < in_masks.size(); ++i) sub[i] = psi[in_masks[i]];
    if (sub.isZero(0.0)) continue;  // keep unused blocks unbuilt
    const Eigen::VectorXcd mapped = block(k) * sub;
    for (std::size_t i = 0; i < out_masks.size(); ++i) {
      out[out_masks[i]] = mapped[static_cast<Eigen::Index>(i)];
    }
  }
  return out;
}

Eigen::MatrixXcd ConditionalOperator::apply_sandwich(
    const Eigen::MatrixXcd& rho) const {
  const Eigen::Index d = Eigen::Index{1} << n_;
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("density dimension does not match 2^n");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int k1 = 0; k1 <= n_; ++k1) {
    if (!has_block(k1)) continue;
    const auto rows_in = masks_with_popcount(n_, k1);
    const auto rows_out = masks_with_popcount(n_, output_excitation(k1));
    for (int k2 = 0; k2 <= n_; ++k2) {
      if (!has_block(k2)) continue;
      const auto cols_in = masks_with_popcount(n_, k2);
      const auto cols_out = masks_with_popcount(n_, output_excitation(k2));
      Eigen::MatrixXcd sub(rows_in.size(), cols_in.size());
      for (std::size_t i = 0; i < rows_in.size(); ++i) {
        for (std::size_t j = 0; j < cols_in.size(); ++j) {
          sub(i, j) = rho(rows_in[i], cols_in[j]);
        }
      }
      if (sub.isZero(0.0)) continue;
      const Eigen::MatrixXcd mapped = block(k1) * sub * block(k2).adjoint();
      for (std::size_t i = 0; i < rows_out.size(); ++i) {
        for (std::size_t j = 0; j < cols_out.size(); ++j) {
          out(rows_out[i], cols_out[j]) = mapped(i, j);
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXcd ConditionalOperator::dense() const {
  if (n_ > kMaxDenseEmitters) {
    throw std::invalid_argument("dense form limited to n <= " +
                                std::to_string(kMaxDenseEmitters));
  }
  const Eigen::Index d = Eigen::Index{1} << n_;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k <= n_; ++k) {
    if (!has_block(k)) continue;
    const auto cols = masks_with_popcount(n_, k);
    const auto rows = masks_with_popcount(n_, output_excitation(k));
    const Eigen::MatrixXcd& b = block(k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        out(rows[i], cols[j]) = b(i, j);
      }
    }
  }
  return out;
}

ConditionalOperator conditional_operator(int n, int p_in, int p_out,
                                         double theta) {
  return ConditionalOperator(n, p_in, p_out, theta);
}

double completeness_defect(int n, int p_in, double theta) {
  double defect = 0.0;
  for (int k = 0; k <= n; ++k) {
    const int q = k + p_in;
    const UnitaryOperator u = propagator(sector_hamiltonian(n, q), theta);
    const std::vector<int> cols = u.basis.indices_with_photons(p_in);
    const Eigen::Index dk = static_cast<Eigen::Index>(cols.size());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dk, dk);
    for (int p_out = std::max(0, q - n); p_out <= q; ++p_out) {
      const std::vector<int> rows = u.basis.indices_with_photons(p_out);
      if (rows.empty()) continue;
      const Eigen::MatrixXcd b = u.matrix(rows, cols);
      sum += b.adjoint() * b;
    }
    const double d =
        (sum - Eigen::MatrixXcd::Identity(dk, dk)).cwiseAbs().maxCoeff();
    defect = std::max(defect, d);
  }
  return defect;
}

}  // namespace qwtrap

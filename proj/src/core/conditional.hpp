#pragma once

#include <Eigen/Dense>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "core/basis.hpp"
#include "core/state.hpp"

namespace qwtrap {

// The measurement-conditioned operator <p_out| U(theta) |p_in> on the
// emitter space, stored block-wise per input excitation count k. Block k
// sends the k-excitation subspace to the (k + p_in - p_out)-excitation
// subspace; it is the corresponding sub-matrix of the sector-(k + p_in)
// propagator. Blocks are built on first use and cached; the cache is
// shared across copies and guarded, so instances behave as immutable
// values safe for concurrent use.
class ConditionalOperator {
 public:
  ConditionalOperator(int n, int p_in, int p_out, double theta);

  int emitters() const { return n_; }
  int photons_in() const { return p_in_; }
  int photons_out() const { return p_out_; }
  double theta() const { return theta_; }
  bool square() const { return p_in_ == p_out_; }

  // Output excitation count for input count k.
  int output_excitation(int k) const { return k + p_in_ - p_out_; }
  bool has_block(int k) const {
    return k >= 0 && k <= n_ && output_excitation(k) >= 0 &&
           output_excitation(k) <= n_;
  }
  const Eigen::MatrixXcd& block(int k) const;

  // Apply to a qubit-only pure state / density matrix on 2^n.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi) const;
  // K rho K^dagger (unnormalized).
  Eigen::MatrixXcd apply_sandwich(const Eigen::MatrixXcd& rho) const;

  // Dense 2^n x 2^n form; refuses n beyond kMaxDenseEmitters.
  Eigen::MatrixXcd dense() const;

  static constexpr int kMaxDenseEmitters = 12;

 private:
  struct Cache;

  int n_;
  int p_in_;
  int p_out_;
  double theta_;
  std::shared_ptr<Cache> cache_;
};

ConditionalOperator conditional_operator(int n, int p_in, int p_out,
                                         double theta);

// Max-norm of sum_{p_out} K^dagger K - I over the emitter space, with p_out
// ranging over every photon count allowed by quanta conservation.
double completeness_defect(int n, int p_in, double theta);

}  // namespace qwtrap

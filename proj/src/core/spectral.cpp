#include "core/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qwtrap {

namespace {

// Deterministic phase: rotate so the largest-magnitude component is real
// and positive.
void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best + 1e-15) {
      best = a;
      imax = i;
    }
  }
  if (best <= 0.0) return;
  v *= std::conj(v[imax]) / std::abs(v[imax]);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int SpectralReport::unit_multiplicity_in_excitation(int k) const {
  int count = 0;
  for (int idx : unit_norm_indices) {
    if (excitations[idx] == k) ++count;
  }
  return count;
}

SpectralReport spectrum(const ConditionalOperator& op, double cluster_tol,
                        double unit_tol) {
  if (!op.square()) {
    throw std::invalid_argument(
        "spectrum requires p_in == p_out (square conditional operator)");
  }
  const int n = op.emitters();

  std::vector<std::complex<double>> values;
  std::vector<Eigen::VectorXcd> vectors;
  std::vector<int> excitations;

  for (int k = 0; k <= n; ++k) {
    if (!op.has_block(k)) continue;
    const Eigen::MatrixXcd& b = op.block(k);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("eigen solver failed on excitation block " +
                               std::to_string(k));
    }
    const auto masks = masks_with_popcount(n, k);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      Eigen::VectorXcd embedded =
          Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
      const Eigen::VectorXcd col = es.eigenvectors().col(i).normalized();
      for (std::size_t j = 0; j < masks.size(); ++j) {
        embedded[masks[j]] = col[static_cast<Eigen::Index>(j)];
      }
      values.push_back(es.eigenvalues()[i]);
      vectors.push_back(std::move(embedded));
      excitations.push_back(k);
    }
  }

  const int m = static_cast<int>(values.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ma = std::abs(values[a]);
    const double mb = std::abs(values[b]);
    if (std::abs(ma - mb) > 1e-15) return ma > mb;
    if (excitations[a] != excitations[b]) return excitations[a] < excitations[b];
    if (values[a].real() != values[b].real())
      return values[a].real() < values[b].real();
    return values[a].imag() < values[b].imag();
  });

  SpectralReport report;
  report.cluster_tol = cluster_tol;
  report.unit_tol = unit_tol;
  report.eigenvalues.reserve(m);
  report.eigenvectors.reserve(m);
  report.excitations.reserve(m);
  for (int i : order) {
    report.eigenvalues.push_back(values[i]);
    report.eigenvectors.push_back(
        PureState{StateBasis::qubit_only(n), std::move(vectors[i])});
    report.excitations.push_back(excitations[i]);
  }

  UnionFind uf(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (std::abs(report.eigenvalues[i] - report.eigenvalues[j]) <= cluster_tol) {
        uf.unite(i, j);
      }
    }
  }
  std::vector<std::vector<int>> groups(m);
  for (int i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);
  for (auto& g : groups) {
    if (!g.empty()) report.clusters.push_back(std::move(g));
  }
  std::sort(report.clusters.begin(), report.clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  // Modified Gram-Schmidt inside each degenerate cluster (two passes).
  for (const auto& cluster : report.clusters) {
    if (cluster.size() < 2) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < cluster.size(); ++i) {
        Eigen::VectorXcd& vi = report.eigenvectors[cluster[i]].amplitudes;
        for (std::size_t j = 0; j < i; ++j) {
          const Eigen::VectorXcd& vj = report.eigenvectors[cluster[j]].amplitudes;
          vi -= vj.dot(vi) * vj;
        }
        const double norm = vi.norm();
        if (norm > 1e-12) vi /= norm;
      }
    }
  }

  for (auto& vec : report.eigenvectors) fix_phase(vec.amplitudes);

  for (int i = 0; i < m; ++i) {
    if (std::abs(report.eigenvalues[i]) >= 1.0 - unit_tol) {
      report.unit_norm_indices.push_back(i);
    }
  }
  return report;
}

}  // namespace qwtrap

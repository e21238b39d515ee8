#include "core/basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qwtrap {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return acc;
}

std::uint64_t sector_size(int n, int quanta) {
  std::uint64_t total = 0;
  const int kmax = std::min(n, quanta);
  for (int k = 0; k <= kmax; ++k) total += binomial(n, k);
  return total;
}

std::vector<std::uint32_t> masks_with_popcount(int n, int k) {
  std::vector<std::uint32_t> masks;
  masks.reserve(binomial(n, k));
  if (k < 0 || k > n) return masks;
  if (k == 0) {
    masks.push_back(0);
    return masks;
  }
  // Gosper's hack walks fixed-popcount masks in ascending order.
  std::uint32_t m = (1u << k) - 1u;
  const std::uint32_t limit = (n == 32) ? 0xffffffffu : (1u << n) - 1u;
  while (m <= limit) {
    masks.push_back(m);
    const std::uint32_t c = m & -m;
    const std::uint32_t r = m + c;
    const std::uint32_t next = (((r ^ m) >> 2) / c) | r;
    if (next <= m) break;
    m = next;
  }
  return masks;
}

SectorBasis::SectorBasis(int emitters, int quanta) : n_(emitters), q_(quanta) {
  if (emitters < 1 || emitters > kMaxEmitters) {
    throw std::invalid_argument("emitter count must be in [1, " +
                                std::to_string(kMaxEmitters) + "], got " +
                                std::to_string(emitters));
  }
  if (quanta < 0) {
    throw std::invalid_argument("total quanta must be non-negative");
  }
  elements_.reserve(sector_size(n_, q_));
  const int kmax = std::min(n_, q_);
  // Ascending mask equals ascending mask within each popcount class merged;
  // iterate masks directly since popcount(mask) <= kmax filters the rest.
  const std::uint64_t space = 1ull << n_;
  for (std::uint64_t mask = 0; mask < space; ++mask) {
    const int k = std::popcount(mask);
    if (k <= kmax) {
      elements_.push_back({static_cast<std::uint32_t>(mask), q_ - k});
    }
  }
}

int SectorBasis::index_of(std::uint32_t mask) const {
  auto it = std::lower_bound(
      elements_.begin(), elements_.end(), mask,
      [](const BasisElement& e, std::uint32_t m) { return e.mask < m; });
  if (it == elements_.end() || it->mask != mask) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<int> SectorBasis::indices_with_photons(int photons) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (elements_[i].photons == photons) out.push_back(i);
  }
  return out;
}

}  // namespace qwtrap

#pragma once

#include <cstdint>
#include <vector>

namespace qwtrap {

// Hard bound on the emitter count for basis enumeration.
inline constexpr int kMaxEmitters = 24;

// Largest dense matrix dimension the exact solvers will accept.
inline constexpr int kMaxDenseDim = 16384;

// One joint configuration of the emitters and the cavity: an occupation
// bit mask (bit m set <=> emitter m excited) plus a photon count.
struct BasisElement {
  std::uint32_t mask = 0;
  int photons = 0;
};

std::uint64_t binomial(int n, int k);

// Number of elements in the sector with the given total quanta.
std::uint64_t sector_size(int n, int quanta);

// All emitter masks with the given excitation count, ascending.
std::vector<std::uint32_t> masks_with_popcount(int n, int k);

// Basis of the conserved-quanta sector: every (mask, p) with
// popcount(mask) + p == quanta, ordered by ascending mask.
class SectorBasis {
 public:
  SectorBasis(int emitters, int quanta);

  int emitters() const { return n_; }
  int quanta() const { return q_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const BasisElement& element(int i) const { return elements_[i]; }
  const std::vector<BasisElement>& elements() const { return elements_; }

  // Index of the element with this mask (photons are determined by the
  // quanta constraint); -1 if the mask does not belong to the sector.
  int index_of(std::uint32_t mask) const;

  // Indices of all elements carrying exactly `photons` photons, ascending mask.
  std::vector<int> indices_with_photons(int photons) const;

  bool operator==(const SectorBasis& other) const {
    return n_ == other.n_ && q_ == other.q_;
  }

 private:
  int n_;
  int q_;
  std::vector<BasisElement> elements_;
};

}  // namespace qwtrap

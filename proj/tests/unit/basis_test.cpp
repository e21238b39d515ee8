#include <bit>

#include "core/basis.hpp"
#include "doctest.h"

using namespace qwtrap;

TEST_CASE("vacuum sector of two emitters has one element") {
  SectorBasis basis(2, 0);
  REQUIRE(basis.size() == 1);
  CHECK(basis.element(0).mask == 0);
  CHECK(basis.element(0).photons == 0);
}

TEST_CASE("two-emitter two-quanta sector lists the four configurations") {
  SectorBasis basis(2, 2);
  REQUIRE(basis.size() == 4);
  const std::uint32_t masks[] = {0, 1, 2, 3};
  const int photons[] = {2, 1, 1, 0};
  for (int i = 0; i < 4; ++i) {
    CHECK(basis.element(i).mask == masks[i]);
    CHECK(basis.element(i).photons == photons[i]);
  }
}

TEST_CASE("six-emitter two-quanta sector size matches the binomial sum") {
  // 1 + C(6,1) + C(6,2) = 22
  CHECK(sector_size(6, 2) == 22);
  CHECK(SectorBasis(6, 2).size() == 22);
}

TEST_CASE("sector sizes match the combinatorial formula exhaustively") {
  for (int n = 1; n <= 10; ++n) {
    for (int q = 0; q <= n + 2; ++q) {
      SectorBasis basis(n, q);
      std::uint64_t expected = 0;
      for (int k = 0; k <= std::min(n, q); ++k) expected += binomial(n, k);
      REQUIRE(static_cast<std::uint64_t>(basis.size()) == expected);
      // quanta constraint, deterministic ascending order, no duplicates
      for (int i = 0; i < basis.size(); ++i) {
        const auto& el = basis.element(i);
        REQUIRE(std::popcount(el.mask) + el.photons == q);
        if (i > 0) REQUIRE(basis.element(i - 1).mask < el.mask);
      }
    }
  }
}

TEST_CASE("index_of inverts the enumeration") {
  SectorBasis basis(5, 3);
  for (int i = 0; i < basis.size(); ++i) {
    CHECK(basis.index_of(basis.element(i).mask) == i);
  }
  CHECK(basis.index_of(0b11111) == -1);  // five excitations exceed the quanta
}

TEST_CASE("masks_with_popcount walks ascending fixed-weight masks") {
  const auto masks = masks_with_popcount(5, 2);
  REQUIRE(masks.size() == binomial(5, 2));
  for (std::size_t i = 0; i < masks.size(); ++i) {
    CHECK(std::popcount(masks[i]) == 2);
    if (i > 0) CHECK(masks[i - 1] < masks[i]);
  }
}

TEST_CASE("enumeration bounds are enforced") {
  CHECK_THROWS_AS(SectorBasis(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SectorBasis(25, 1), std::invalid_argument);
  CHECK_THROWS_AS(SectorBasis(3, -1), std::invalid_argument);
}

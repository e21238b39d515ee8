#include <cmath>
#include <complex>

#include "core/state.hpp"
#include "doctest.h"

using namespace qwtrap;

TEST_CASE("W1 at n=3 is the uniform single-excitation superposition") {
  const PureState w1 = w1_state(3);
  const double a = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w1.amplitudes[0b001] - a) < 1e-15);
  CHECK(std::abs(w1.amplitudes[0b010] - a) < 1e-15);
  CHECK(std::abs(w1.amplitudes[0b100] - a) < 1e-15);
  CHECK(std::abs(w1.norm() - 1.0) < 1e-12);
}

TEST_CASE("W2 at n=3 is the uniform two-excitation superposition") {
  const PureState w2 = w2_state(3);
  const double a = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w2.amplitudes[0b011] - a) < 1e-15);
  CHECK(std::abs(w2.amplitudes[0b101] - a) < 1e-15);
  CHECK(std::abs(w2.amplitudes[0b110] - a) < 1e-15);
}

TEST_CASE("singlet(0,1) at n=2 is (|10> - |01>)/sqrt(2)") {
  // leftmost ket symbol is emitter 0, so |10> has mask 0b01
  const PureState s = singlet_state(2, 0, 1);
  const double a = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitudes[0b01] - a) < 1e-15);
  CHECK(std::abs(s.amplitudes[0b10] + a) < 1e-15);
}

TEST_CASE("canonical states are normalized and mutually orthogonal") {
  for (int n = 2; n <= 8; ++n) {
    const PureState w1 = w1_state(n);
    const PureState w2 = w2_state(n);
    const PureState phi = phi_state(n);
    CHECK(std::abs(w1.norm() - 1.0) < 1e-12);
    CHECK(std::abs(w2.norm() - 1.0) < 1e-12);
    CHECK(std::abs(phi.norm() - 1.0) < 1e-12);
    if (n >= 3) {
      CHECK(std::abs(w1.amplitudes.dot(w2.amplitudes)) < 1e-12);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          CHECK(std::abs(w1.amplitudes.dot(singlet_state(n, i, j).amplitudes)) <
                1e-12);
        }
      }
    }
  }
}

TEST_CASE("phi amplitude is 1/sqrt(n(n-1)/2)") {
  const PureState phi = phi_state(4);
  CHECK(std::abs(phi.amplitudes[0b0011] - 1.0 / std::sqrt(6.0)) < 1e-15);
}

TEST_CASE("fidelity examples") {
  const PureState w1 = w1_state(3);
  CHECK(fidelity(pure_density(w1), w1) == doctest::Approx(1.0).epsilon(1e-12));
  // a single W component overlaps at 1/3
  const PureState e0 = computational_state(3, 0b001);
  CHECK(fidelity(pure_density(e0), w1) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  // maximally mixed state on 2^3 overlaps at 1/8
  CHECK(fidelity(maximally_mixed(3), w1) == doctest::Approx(1.0 / 8).epsilon(1e-12));
}

TEST_CASE("fidelity is invariant under a global phase of the target") {
  const PureState w1 = w1_state(4);
  PureState rotated = w1;
  rotated.amplitudes *= std::polar(1.0, 1.234);
  const PureState probe = computational_state(4, 0b0001);
  CHECK(fidelity(probe, w1) == doctest::Approx(fidelity(probe, rotated)).epsilon(1e-13));
  CHECK(fidelity(pure_density(probe), rotated) ==
        doctest::Approx(fidelity(pure_density(probe), w1)).epsilon(1e-13));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(w1_state(1), std::invalid_argument);
  CHECK_THROWS_AS(singlet_state(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(singlet_state(2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(computational_state(2, 0b100), std::invalid_argument);
}

TEST_CASE("density validation accepts proper states and rejects junk") {
  CHECK_NOTHROW(validate_density(maximally_mixed(3)));
  CHECK_NOTHROW(validate_density(pure_density(w1_state(3))));
  DensityMatrix bad = maximally_mixed(2);
  bad.matrix(0, 1) = 0.5;  // breaks Hermiticity
  CHECK_THROWS_AS(validate_density(bad), std::invalid_argument);
  DensityMatrix scaled = maximally_mixed(2);
  scaled.matrix *= 2.0;  // trace 2
  CHECK_THROWS_AS(validate_density(scaled), std::invalid_argument);
}

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "core/conditional.hpp"
#include "core/state.hpp"

namespace qwtrap {

struct ProtocolConfig {
  int n = 0;
  double theta = 0.0;
  int reps = 0;
  int monitor = 1;
  std::string initial;  // descriptor label, informational
  std::string target;
};

struct ProtocolStep {
  int index = 0;
  double success_probability = 1.0;  // cumulative P_i
  double fidelity = 0.0;
  double yield = 1.0;  // product P_0..P_i
  std::optional<PureState> pure_state;       // set on the pure pipeline
  std::optional<DensityMatrix> mixed_state;  // set on the mixed pipeline
};

struct ProtocolTrace {
  ProtocolConfig config;
  std::vector<ProtocolStep> steps;
  // Set when the unnormalized success weight fell below 1e-300 and the
  // remaining repetitions were dropped.
  bool extinct = false;
};

// Repeated inject-evolve-measure protocol conditioned on measuring
// `monitor_p` photons every round. Step i holds the normalized state
// K^i rho K^dagger^i / P_i together with P_i, F_i and the yield.
ProtocolTrace run_conditional(const PureState& initial, double theta, int reps,
                              int monitor_p, const PureState& target);
ProtocolTrace run_conditional(const DensityMatrix& initial, double theta,
                              int reps, int monitor_p, const PureState& target);

// Two-photon monitoring variant used for qubit initialization: monitor_p = 2
// with the vacuum as target. Defaults to the maximally mixed start.
ProtocolTrace initialize_two_photon(int n, double theta, int reps);
ProtocolTrace initialize_two_photon(const DensityMatrix& initial, double theta,
                                    int reps);

// Free-dynamics amplitudes of the W1 Rabi chain for one or two total quanta.
struct RabiAmplitudes {
  int quanta = 1;
  std::complex<double> stay;      // on |W1, q-1>
  std::complex<double> vacuum_up; // on |0..0, q>
  std::complex<double> phi_down;  // on |phi, 0>, two-quanta case only
};

RabiAmplitudes rabi_amplitudes(int n, int quanta, double t);

}  // namespace qwtrap

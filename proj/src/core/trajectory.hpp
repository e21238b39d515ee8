#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/state.hpp"

namespace qwtrap {

struct TrajectoryConfig {
  int n = 0;
  double theta = 0.0;
  int reps = 0;
  int monitor = 1;
  long samples = 0;
  std::uint64_t seed = 0;
  std::string initial;
};

struct TrajectoryStats {
  TrajectoryConfig config;
  long samples = 0;
  // Trajectories whose first attempt produced `reps` consecutive monitored
  // outcomes; successes/samples estimates the protocol's P_N.
  long successes = 0;
  double rate = 0.0;
  double stderr_binomial = 0.0;
  // Per-trajectory totals over the full run-until-success execution.
  std::map<long, long> injection_histogram;  // photons injected -> count
  std::map<int, long> restart_histogram;     // restarts needed -> count
  // outcome_counts[j][p] = times photon count p was measured at attempt
  // position j (aggregated over all trajectories and attempts).
  std::vector<std::map<int, long>> outcome_counts;
  // Trajectories cut off by the internal restart cap before succeeding.
  long exhausted = 0;
};

// Stochastic protocol sampling. Every round draws the measured photon count
// from trace(K_p rho K_p^dagger); the monitored outcome continues the
// attempt, anything else restarts from the initial state. A trajectory ends
// once an attempt reaches `reps` consecutive monitored outcomes. Results are
// bit-identical for a fixed seed regardless of evaluation order because each
// trajectory draws from its own (seed, index) stream.
TrajectoryStats run_trajectories(const PureState& initial, double theta,
                                 int reps, int monitor_p, long samples,
                                 std::uint64_t seed);
TrajectoryStats run_trajectories(const DensityMatrix& initial, double theta,
                                 int reps, int monitor_p, long samples,
                                 std::uint64_t seed);

}  // namespace qwtrap

#include "core/trajectory.hpp"

#include <cmath>
#include <stdexcept>

#include "core/conditional.hpp"
#include "core/rng.hpp"

namespace qwtrap {

namespace {

// Run-until-success guard for configurations where the monitored branch has
// (numerically) vanishing weight.
constexpr int kRestartCap = 100000;

struct PurePolicy {
  using State = Eigen::VectorXcd;
  static State prepare(const PureState& s) {
    return s.amplitudes / s.amplitudes.norm();
  }
  static State branch(const ConditionalOperator& op, const State& s) {
    return op.apply(s);
  }
  static double weight(const State& s) { return s.squaredNorm(); }
  static void normalize(State& s, double w) { s /= std::sqrt(w); }
};

struct MixedPolicy {
  using State = Eigen::MatrixXcd;
  static State prepare(const DensityMatrix& s) {
    return s.matrix / s.matrix.trace().real();
  }
  static State branch(const ConditionalOperator& op, const State& s) {
    return op.apply_sandwich(s);
  }
  static double weight(const State& s) { return s.trace().real(); }
  static void normalize(State& s, double w) { s /= w; }
};

template <typename Policy, typename Initial>
TrajectoryStats run_impl(const Initial& initial, int n, double theta, int reps,
                         int monitor_p, long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
  if (reps < 0) throw std::invalid_argument("repetition count must be >= 0");
  if (monitor_p < 0) throw std::invalid_argument("monitored photon count must be >= 0");
  if (initial.basis.kind != StateBasis::Kind::QubitOnly) {
    throw std::invalid_argument("trajectories run on the emitter space");
  }

  // One operator per possible measured photon count; quanta conservation
  // bounds p_out by n + monitor_p.
  std::vector<ConditionalOperator> ops;
  ops.reserve(static_cast<std::size_t>(n + monitor_p) + 1);
  for (int p = 0; p <= n + monitor_p; ++p) {
    ops.emplace_back(n, monitor_p, p, theta);
  }

  TrajectoryStats stats;
  stats.config = {n, theta, reps, monitor_p, samples, seed, ""};
  stats.samples = samples;
  stats.outcome_counts.resize(static_cast<std::size_t>(std::max(reps, 0)));

  const typename Policy::State start = Policy::prepare(initial);

  for (long traj = 0; traj < samples; ++traj) {
    SplitMix64 rng(SplitMix64::stream_key(seed, static_cast<std::uint64_t>(traj)));
    typename Policy::State state = start;
    int restarts = 0;
    long injections = 0;
    int position = 0;
    bool done = reps == 0;

    while (!done) {
      injections += monitor_p;  // fresh photons start every round
      std::vector<double> weights(ops.size(), 0.0);
      std::vector<typename Policy::State> branches(ops.size());
      double total = 0.0;
      for (std::size_t p = 0; p < ops.size(); ++p) {
        branches[p] = Policy::branch(ops[p], state);
        weights[p] = Policy::weight(branches[p]);
        total += weights[p];
      }
      const double u = rng.uniform() * total;
      std::size_t outcome = ops.size() - 1;
      double acc = 0.0;
      for (std::size_t p = 0; p < ops.size(); ++p) {
        acc += weights[p];
        if (u < acc) {
          outcome = p;
          break;
        }
      }
      if (position < reps) {
        ++stats.outcome_counts[static_cast<std::size_t>(position)]
                              [static_cast<int>(outcome)];
      }
      if (static_cast<int>(outcome) == monitor_p && weights[outcome] > 0.0) {
        state = std::move(branches[outcome]);
        Policy::normalize(state, weights[outcome]);
        ++position;
        if (position == reps) done = true;
      } else {
        ++restarts;
        if (restarts >= kRestartCap) {
          ++stats.exhausted;
          break;
        }
        state = start;
        position = 0;
      }
    }

    if (restarts == 0) ++stats.successes;
    ++stats.restart_histogram[restarts];
    ++stats.injection_histogram[injections];
  }

  stats.rate = static_cast<double>(stats.successes) / static_cast<double>(samples);
  stats.stderr_binomial =
      std::sqrt(stats.rate * (1.0 - stats.rate) / static_cast<double>(samples));
  return stats;
}

}  // namespace

TrajectoryStats run_trajectories(const PureState& initial, double theta,
                                 int reps, int monitor_p, long samples,
                                 std::uint64_t seed) {
  return run_impl<PurePolicy>(initial, initial.basis.n, theta, reps, monitor_p,
                              samples, seed);
}

TrajectoryStats run_trajectories(const DensityMatrix& initial, double theta,
                                 int reps, int monitor_p, long samples,
                                 std::uint64_t seed) {
  validate_density(initial);
  return run_impl<MixedPolicy>(initial, initial.basis.n, theta, reps, monitor_p,
                               samples, seed);
}

}  // namespace qwtrap

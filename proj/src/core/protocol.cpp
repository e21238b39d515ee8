#include "core/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "core/hamiltonian.hpp"

namespace qwtrap {

namespace {

constexpr double kExtinctionFloor = 1e-300;

void check_protocol_args(const StateBasis& basis, const PureState& target,
                         int reps, int monitor_p) {
  if (basis.kind != StateBasis::Kind::QubitOnly) {
    throw std::invalid_argument("protocol states live on the emitter space");
  }
  if (!(target.basis == basis)) {
    throw std::invalid_argument("target basis does not match initial state");
  }
  if (reps < 0) throw std::invalid_argument("repetition count must be >= 0");
  if (monitor_p < 0) throw std::invalid_argument("monitored photon count must be >= 0");
}

void reject_vacuum(double vacuum_weight) {
  if (vacuum_weight >= 1.0 - 1e-12) {
    throw std::invalid_argument(
        "the vacuum state cannot seed the protocol (nothing to entangle)");
  }
}

ProtocolConfig make_config(int n, double theta, int reps, int monitor_p) {
  ProtocolConfig cfg;
  cfg.n = n;
  cfg.theta = theta;
  cfg.reps = reps;
  cfg.monitor = monitor_p;
  return cfg;
}

}  // namespace

ProtocolTrace run_conditional(const PureState& initial, double theta, int reps,
                              int monitor_p, const PureState& target) {
  check_protocol_args(initial.basis, target, reps, monitor_p);
  const int n = initial.basis.n;
  const double nrm = initial.norm();
  if (nrm < 1e-12) throw std::invalid_argument("initial state has zero norm");
  reject_vacuum(std::norm(initial.amplitudes[0]) / (nrm * nrm));

  ProtocolTrace trace;
  trace.config = make_config(n, theta, reps, monitor_p);

  const ConditionalOperator k(n, monitor_p, monitor_p, theta);
  Eigen::VectorXcd carrier = initial.amplitudes / nrm;
  double yield = 1.0;
  for (int i = 0; i <= reps; ++i) {
    if (i > 0) carrier = k.apply(carrier);
    const double weight = carrier.squaredNorm();
    if (weight < kExtinctionFloor) {
      trace.extinct = true;
      break;
    }
    ProtocolStep step;
    step.index = i;
    step.success_probability = (i == 0) ? 1.0 : weight;
    yield *= step.success_probability;
    step.yield = yield;
    PureState normalized{initial.basis, carrier / std::sqrt(weight)};
    step.fidelity = fidelity(normalized, target);
    step.pure_state = std::move(normalized);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

ProtocolTrace run_conditional(const DensityMatrix& initial, double theta,
                              int reps, int monitor_p,
                              const PureState& target) {
  check_protocol_args(initial.basis, target, reps, monitor_p);
  validate_density(initial);
  const int n = initial.basis.n;
  reject_vacuum(initial.matrix(0, 0).real());

  ProtocolTrace trace;
  trace.config = make_config(n, theta, reps, monitor_p);

  const ConditionalOperator k(n, monitor_p, monitor_p, theta);
  Eigen::MatrixXcd carrier = initial.matrix;
  double yield = 1.0;
  for (int i = 0; i <= reps; ++i) {
    if (i > 0) carrier = k.apply_sandwich(carrier);
    const double weight = carrier.trace().real();
    if (weight < kExtinctionFloor) {
      trace.extinct = true;
      break;
    }
    ProtocolStep step;
    step.index = i;
    step.success_probability = (i == 0) ? 1.0 : weight;
    yield *= step.success_probability;
    step.yield = yield;
    DensityMatrix normalized{initial.basis, carrier / weight};
    step.fidelity = fidelity(normalized, target);
    step.mixed_state = std::move(normalized);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

ProtocolTrace initialize_two_photon(int n, double theta, int reps) {
  return initialize_two_photon(maximally_mixed(n), theta, reps);
}

ProtocolTrace initialize_two_photon(const DensityMatrix& initial, double theta,
                                    int reps) {
  const int n = initial.basis.n;
  ProtocolTrace trace =
      run_conditional(initial, theta, reps, 2, vacuum_state(n));
  trace.config.initial = "mixed";
  trace.config.target = "vacuum";
  return trace;
}

RabiAmplitudes rabi_amplitudes(int n, int quanta, double t) {
  if (quanta != 1 && quanta != 2) {
    throw std::invalid_argument("rabi_amplitudes supports one or two quanta");
  }
  if (n < 2 || n > kMaxEmitters) {
    throw std::invalid_argument("emitter count out of range");
  }
  const UnitaryOperator u = propagator(sector_hamiltonian(n, quanta), t);
  const SectorBasis& basis = u.basis;

  Eigen::VectorXcd w1 = Eigen::VectorXcd::Zero(basis.size());
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m) w1[basis.index_of(1u << m)] = a;
  const Eigen::VectorXcd evolved = u.matrix * w1;

  RabiAmplitudes amps;
  amps.quanta = quanta;
  amps.stay = w1.dot(evolved);
  amps.vacuum_up = evolved[basis.index_of(0)];
  amps.phi_down = 0.0;
  if (quanta == 2) {
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(basis.size());
    const double b = 1.0 / std::sqrt(n * (n - 1) / 2.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        phi[basis.index_of((1u << i) | (1u << j))] = b;
      }
    }
    amps.phi_down = phi.dot(evolved);
  }
  return amps;
}

}  // namespace qwtrap

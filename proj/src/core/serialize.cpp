#include "core/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qwtrap {

namespace {

ordered_json basis_json(const StateBasis& basis) {
  ordered_json j;
  j["n"] = basis.n;
  if (basis.kind == StateBasis::Kind::QubitOnly) {
    j["q"] = "qubit-only";
  } else {
    j["q"] = basis.quanta;
  }
  return j;
}

ordered_json complex_pair(const std::complex<double>& z) {
  return ordered_json::array({z.real(), z.imag()});
}

}  // namespace

ordered_json to_json(const PureState& psi) {
  ordered_json j;
  j["basis"] = basis_json(psi.basis);
  ordered_json amps = ordered_json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
    amps.push_back(complex_pair(psi.amplitudes[i]));
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

ordered_json to_json(const DensityMatrix& rho) {
  ordered_json j;
  j["basis"] = basis_json(rho.basis);
  ordered_json entries = ordered_json::array();
  for (Eigen::Index r = 0; r < rho.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.matrix.cols(); ++c) {
      entries.push_back(complex_pair(rho.matrix(r, c)));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json to_json(const SpectralReport& report) {
  ordered_json j;
  ordered_json values = ordered_json::array();
  for (const auto& v : report.eigenvalues) values.push_back(complex_pair(v));
  j["eigenvalues"] = std::move(values);
  j["clusters"] = report.clusters;
  j["unit_norm_indices"] = report.unit_norm_indices;
  return j;
}

ordered_json to_json(const ProtocolTrace& trace, bool include_states) {
  ordered_json j;
  j["config"] = {{"n", trace.config.n},
                 {"theta", trace.config.theta},
                 {"reps", trace.config.reps},
                 {"monitor", trace.config.monitor},
                 {"initial", trace.config.initial},
                 {"target", trace.config.target}};
  j["extinct"] = trace.extinct;
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json row;
    row["N"] = s.index;
    row["P"] = s.success_probability;
    row["F"] = s.fidelity;
    row["Y"] = s.yield;
    if (include_states) {
      if (s.pure_state) {
        row["state"] = to_json(*s.pure_state);
      } else if (s.mixed_state) {
        row["state"] = to_json(*s.mixed_state);
      }
    }
    steps.push_back(std::move(row));
  }
  j["steps"] = std::move(steps);
  return j;
}

ordered_json to_json(const TrajectoryStats& stats) {
  ordered_json j;
  j["config"] = {{"n", stats.config.n},         {"theta", stats.config.theta},
                 {"reps", stats.config.reps},   {"monitor", stats.config.monitor},
                 {"initial", stats.config.initial}};
  j["samples"] = stats.samples;
  j["successes"] = stats.successes;
  j["rate"] = stats.rate;
  j["stderr"] = stats.stderr_binomial;
  j["seed"] = stats.config.seed;
  j["exhausted"] = stats.exhausted;
  ordered_json restarts = ordered_json::array();
  for (const auto& [k, v] : stats.restart_histogram) {
    restarts.push_back(ordered_json::array({k, v}));
  }
  j["restart_histogram"] = std::move(restarts);
  ordered_json injections = ordered_json::array();
  for (const auto& [k, v] : stats.injection_histogram) {
    injections.push_back(ordered_json::array({k, v}));
  }
  j["injection_histogram"] = std::move(injections);
  ordered_json outcomes = ordered_json::array();
  for (std::size_t step = 0; step < stats.outcome_counts.size(); ++step) {
    for (const auto& [outcome, count] : stats.outcome_counts[step]) {
      outcomes.push_back(ordered_json::array(
          {static_cast<long>(step), outcome, count}));
    }
  }
  j["outcome_counts"] = std::move(outcomes);
  return j;
}

std::string format_probability(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12f", value);
  return buf;
}

std::string trace_csv(const ProtocolTrace& trace) {
  std::string out = "N,P,F,Y\n";
  for (const auto& s : trace.steps) {
    out += std::to_string(s.index);
    out += ',';
    out += format_probability(s.success_probability);
    out += ',';
    out += format_probability(s.fidelity);
    out += ',';
    out += format_probability(s.yield);
    out += '\n';
  }
  return out;
}

std::string stats_csv(const TrajectoryStats& stats) {
  std::string out = "step,outcome,count\n";
  for (std::size_t step = 0; step < stats.outcome_counts.size(); ++step) {
    for (const auto& [outcome, count] : stats.outcome_counts[step]) {
      out += std::to_string(step);
      out += ',';
      out += std::to_string(outcome);
      out += ',';
      out += std::to_string(count);
      out += '\n';
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
  if (!file.good()) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace qwtrap

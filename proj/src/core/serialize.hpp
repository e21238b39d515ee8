#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "core/protocol.hpp"
#include "core/spectral.hpp"
#include "core/state.hpp"
#include "core/trajectory.hpp"

namespace qwtrap {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const PureState& psi);
ordered_json to_json(const DensityMatrix& rho);
ordered_json to_json(const SpectralReport& report);
ordered_json to_json(const ProtocolTrace& trace, bool include_states = false);
ordered_json to_json(const TrajectoryStats& stats);

// CSV with header N,P,F,Y and probabilities printed to 12 decimal places.
std::string trace_csv(const ProtocolTrace& trace);

// Step-resolved outcome histogram: columns step,outcome,count.
std::string stats_csv(const TrajectoryStats& stats);

std::string format_probability(double value);

// Throws std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qwtrap

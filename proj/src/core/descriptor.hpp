#pragma once

#include <string>
#include <variant>

#include "core/state.hpp"

namespace qwtrap {

// Textual state descriptors used by the CLI and the C API:
//   w1 | w2 | phi | vacuum | mixed | singlet:i,j | ket:<bits>
// where <bits> is the occupation pattern with emitter 0 leftmost, e.g.
// ket:100 excites emitter 0 of three.
std::variant<PureState, DensityMatrix> parse_state(const std::string& text,
                                                   int n);

// Same, but rejects descriptors that denote mixed states.
PureState parse_pure_state(const std::string& text, int n);

DensityMatrix as_density(const std::variant<PureState, DensityMatrix>& state);

}  // namespace qwtrap

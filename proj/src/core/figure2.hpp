#pragma once

#include <string>
#include <vector>

#include "core/svg.hpp"

namespace qwtrap {

// Fidelity and purification-yield curves for the three-, six- and
// nine-emitter protocols at their per-n evolution times. For n = 9 both
// time candidates are drawn: the node rule pi/sqrt(34) and the
// pi/sqrt(32) variant. The yield inset shows the printed running-product
// definition next to the per-run probability P_N.
std::vector<Series> figure2_fidelity_series(int n_max_reps);
std::vector<Series> figure2_yield_series(int n_max_reps);

std::string figure2_svg(int n_max_reps = 12);

}  // namespace qwtrap

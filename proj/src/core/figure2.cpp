#include "core/figure2.hpp"

#include <cmath>

#include "core/closed_form.hpp"

namespace qwtrap {

namespace {

struct Case {
  int n;
  double theta;
  std::string label;
};

std::vector<Case> fidelity_cases() {
  return {
      {3, closed_form::node_time(3, 1), "n=3, theta=pi/sqrt(10)"},
      {6, closed_form::node_time(6, 1), "n=6, theta=pi/sqrt(22)"},
      {9, closed_form::node_time(9, 1), "n=9, theta=pi/sqrt(34)"},
      {9, M_PI / std::sqrt(32.0), "n=9, theta=pi/sqrt(32)"},
  };
}

std::vector<Case> yield_cases() {
  return {
      {3, closed_form::node_time(3, 1), "n=3"},
      {6, closed_form::node_time(6, 1), "n=6"},
      {9, closed_form::node_time(9, 1), "n=9"},
  };
}

}  // namespace

std::vector<Series> figure2_fidelity_series(int n_max_reps) {
  std::vector<Series> out;
  for (const auto& c : fidelity_cases()) {
    Series s;
    s.label = c.label;
    for (int reps = 0; reps <= n_max_reps; ++reps) {
      s.x.push_back(reps);
      s.y.push_back(closed_form::p_and_f(c.n, c.theta, reps).f);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Series> figure2_yield_series(int n_max_reps) {
  std::vector<Series> out;
  for (const auto& c : yield_cases()) {
    Series printed;
    printed.label = c.label + " product";
    Series per_run;
    per_run.label = c.label + " P_N";
    for (int reps = 0; reps <= n_max_reps; ++reps) {
      printed.x.push_back(reps);
      printed.y.push_back(closed_form::purification_yield(c.n, c.theta, reps));
      per_run.x.push_back(reps);
      per_run.y.push_back(closed_form::p_and_f(c.n, c.theta, reps).p);
    }
    out.push_back(std::move(printed));
    out.push_back(std::move(per_run));
  }
  return out;
}

std::string figure2_svg(int n_max_reps) {
  ChartOptions options;
  options.width = 820;
  options.height = 560;
  options.title = "Conditioned-state fidelity and yield";
  options.x_label = "repetitions N";
  options.y_label = "fidelity F";
  return render_chart_with_inset(figure2_fidelity_series(n_max_reps), options,
                                 figure2_yield_series(n_max_reps), "yield Y");
}

}  // namespace qwtrap

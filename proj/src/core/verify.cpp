#include "core/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/closed_form.hpp"
#include "core/conditional.hpp"
#include "core/protocol.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"
#include "core/theta_expr.hpp"
#include "core/trajectory.hpp"

namespace qwtrap {

namespace {

constexpr std::uint64_t kVerifySeed = 0x5eed01ull;

// theta in (0.1, pi - 0.1) at least 0.05 away from every node of the two
// protocol frequencies.
double generic_theta(int n, SplitMix64& rng) {
  const double omega_w = std::sqrt(4.0 * n - 2.0);
  const double omega_t = std::sqrt(static_cast<double>(std::max(n - 2, 1)));
  for (;;) {
    const double theta = 0.1 + rng.uniform() * (M_PI - 0.2);
    bool clear = true;
    for (double omega : {omega_w, omega_t}) {
      const double phase = theta * omega / M_PI;
      if (std::abs(phase - std::round(phase)) * M_PI / omega < 0.05) {
        clear = false;
      }
    }
    if (clear) return theta;
  }
}

std::string fmt_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

CheckResult deviation_check(const std::string& name, double max_dev, double tol,
                            const std::string& detail = "") {
  CheckResult r;
  r.name = name;
  r.observed = max_dev;
  r.expected = 0.0;
  r.tolerance = tol;
  r.passed = max_dev <= tol;
  r.detail = detail;
  return r;
}

CheckResult value_check(const std::string& name, double observed,
                        double expected, double tol,
                        const std::string& detail = "") {
  CheckResult r;
  r.name = name;
  r.observed = observed;
  r.expected = expected;
  r.tolerance = tol;
  r.passed = std::abs(observed - expected) <= tol;
  r.detail = detail;
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> checks;
  SplitMix64 rng(kVerifySeed);

  // Engine vs the closed-form law for P and F.
  {
    double max_dev = 0.0;
    for (int n = 2; n <= 10; ++n) {
      const PureState target = (n == 2) ? singlet_state(2, 0, 1) : w1_state(n);
      for (int rep_theta = 0; rep_theta < 3; ++rep_theta) {
        const double theta = 0.05 + rng.uniform() * (M_PI - 0.1);
        const ProtocolTrace trace = run_conditional(
            computational_state(n, 1), theta, 10, 1, target);
        for (const auto& step : trace.steps) {
          const auto pf = closed_form::p_and_f(n, theta, step.index);
          max_dev = std::max(max_dev, std::abs(step.success_probability - pf.p));
          max_dev = std::max(max_dev, std::abs(step.fidelity - pf.f));
        }
      }
    }
    checks.push_back(deviation_check(
        "protocol engine matches closed-form P/F (n=2..10, N<=10)", max_dev,
        1e-9));
  }

  // Two-qubit Bell limits at theta = pi/(4 sqrt 6).
  {
    const double theta = eval_theta("pi/(4*sqrt(6))");
    const ProtocolTrace trace = run_conditional(
        computational_state(2, 1), theta, 20, 1, singlet_state(2, 0, 1));
    const auto& last = trace.steps.back();
    const double p_dev = std::abs(last.success_probability -
                                  0.5 * (1.0 + std::pow(2.0, -20.0)));
    const double f_dev =
        std::abs(last.fidelity - 1.0 / (1.0 + std::pow(2.0, -20.0)));
    checks.push_back(deviation_check(
        "two-qubit protocol reaches P=1/2, F=1 at pi/(4 sqrt 6)",
        std::max(p_dev, f_dev), 1e-9));
  }

  // W1 and W2 are eigenvectors of the one-photon conditional operator.
  {
    double max_residual = 0.0;
    double max_eig_dev = 0.0;
    for (int n = 2; n <= 10; ++n) {
      for (int rep = 0; rep < 2; ++rep) {
        const double theta = generic_theta(n, rng);
        const ConditionalOperator op(n, 1, 1, theta);
        for (const PureState& state : {w1_state(n), w2_state(n)}) {
          const Eigen::VectorXcd image = op.apply(state.amplitudes);
          const std::complex<double> lambda = state.amplitudes.dot(image);
          max_residual = std::max(
              max_residual, (image - lambda * state.amplitudes).norm());
        }
        const Eigen::VectorXcd w1_image = op.apply(w1_state(n).amplitudes);
        const std::complex<double> lambda =
            w1_state(n).amplitudes.dot(w1_image);
        max_eig_dev = std::max(
            max_eig_dev,
            std::abs(lambda - std::complex<double>(
                                  closed_form::superop_eigenvalue(
                                      closed_form::EigKind::W1, n, theta),
                                  0.0)));
      }
    }
    checks.push_back(deviation_check(
        "W1/W2 eigenvector residuals of <1|U|1> (n=2..10)", max_residual,
        1e-9));
    checks.push_back(deviation_check(
        "W1 eigenvalue equals cos(sqrt(4n-2) theta)", max_eig_dev, 1e-9));
  }

  // Degenerate one-excitation eigenvalue cos(sqrt(n-2) theta), n >= 3.
  {
    double max_dev = 0.0;
    for (int n = 3; n <= 6; ++n) {
      const double theta = generic_theta(n, rng);
      const SpectralReport report = spectrum(ConditionalOperator(n, 1, 1, theta));
      const double expected =
          closed_form::superop_eigenvalue(closed_form::EigKind::BrightT, n, theta);
      int found = 0;
      for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
        if (report.excitations[i] == 1 &&
            std::abs(report.eigenvalues[i] - std::complex<double>(expected, 0)) <
                1e-8) {
          ++found;
        }
      }
      max_dev = std::max(max_dev, std::abs(static_cast<double>(found) - (n - 1)));
    }
    checks.push_back(deviation_check(
        "one-excitation block carries cos(sqrt(n-2) theta) with multiplicity n-1",
        max_dev, 0.0));
  }

  // Vacuum monitoring: dark-state degeneracy.
  {
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
      const double theta = generic_theta(n, rng);
      const SpectralReport report = spectrum(ConditionalOperator(n, 0, 0, theta));
      const int multiplicity = report.unit_multiplicity_in_excitation(1);
      worst = std::max(worst, std::abs(static_cast<double>(multiplicity - (n - 1))));
    }
    checks.push_back(deviation_check(
        "vacuum-monitor unit eigenvalue multiplicity is n-1 in the "
        "one-excitation sector",
        worst, 0.0));
  }
  {
    const double theta = generic_theta(3, rng);
    const SpectralReport report = spectrum(ConditionalOperator(3, 0, 0, theta));
    checks.push_back(value_check(
        "n=3 vacuum-monitor total unit multiplicity", report.unit_multiplicity(),
        3.0, 0.0));
  }

  // Two-photon monitoring: vacuum eigenvalue law.
  {
    double max_dev = 0.0;
    for (int n = 2; n <= 8; ++n) {
      const double theta = 0.05 + rng.uniform() * (M_PI - 0.1);
      const ConditionalOperator op(n, 2, 2, theta);
      const double observed = op.block(0)(0, 0).real();
      const double expected = closed_form::superop_eigenvalue(
          closed_form::EigKind::Vacuum2Photon, n, theta);
      max_dev = std::max(max_dev, std::abs(observed - expected));
    }
    checks.push_back(deviation_check(
        "<2|U|2> vacuum eigenvalue equals (n(cos+1)-1)/(2n-1)", max_dev, 1e-9));
  }

  // Measurement completeness.
  {
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
      for (int p_in = 0; p_in <= 2; ++p_in) {
        const double theta = 0.05 + rng.uniform() * (M_PI - 0.1);
        worst = std::max(worst, completeness_defect(n, p_in, theta));
      }
    }
    checks.push_back(deviation_check(
        "sum over outcomes of K^dagger K equals identity", worst, 1e-10));
  }

  // One-quantum Rabi law.
  {
    double max_dev = 0.0;
    for (int n = 2; n <= 8; ++n) {
      const double t = 0.1 + rng.uniform() * 2.0;
      const RabiAmplitudes amps = rabi_amplitudes(n, 1, t);
      const double root_n = std::sqrt(static_cast<double>(n));
      max_dev = std::max(
          max_dev, std::abs(amps.stay - std::complex<double>(std::cos(root_n * t), 0)));
      max_dev = std::max(
          max_dev, std::abs(amps.vacuum_up -
                            std::complex<double>(0, -std::sin(root_n * t))));
    }
    checks.push_back(deviation_check(
        "one-quantum Rabi amplitudes (cos(sqrt n t), -i sin(sqrt n t))",
        max_dev, 1e-10));
  }

  // Two-quanta chain: the numeric frequency is sqrt(4n-2), not sqrt(3n-2).
  {
    double max_dev = 0.0;
    double min_alt_gap = 1e9;
    for (int n = 2; n <= 8; ++n) {
      const double t = 0.5;
      const RabiAmplitudes amps = rabi_amplitudes(n, 2, t);
      const auto chain = closed_form::chain_amplitudes(n, t);
      max_dev = std::max(max_dev, std::abs(amps.stay - chain.mid));
      max_dev = std::max(max_dev, std::abs(amps.vacuum_up - chain.up));
      max_dev = std::max(max_dev, std::abs(amps.phi_down - chain.down));
      min_alt_gap = std::min(
          min_alt_gap,
          std::abs(amps.stay.real() - std::cos(std::sqrt(3.0 * n - 2.0) * t)));
    }
    checks.push_back(deviation_check(
        "two-quanta chain matches the sqrt(4n-2) closed form", max_dev, 1e-10,
        "closest approach to the sqrt(3n-2) variant is " + fmt_num(min_alt_gap)));
  }

  // Monte Carlo agreement with the deterministic engine.
  {
    const double theta = closed_form::node_time(3, 1);
    const double expected = closed_form::p_and_f(3, theta, 5).p;
    const TrajectoryStats stats = run_trajectories(
        computational_state(3, 1), theta, 5, 1, 20000, 20240229ull);
    const double sigma = std::sqrt(expected * (1 - expected) / 20000.0);
    checks.push_back(value_check(
        "trajectory success rate matches P_5 (n=3, 2e4 samples)", stats.rate,
        expected, 4.0 * sigma,
        "sigma=" + fmt_num(sigma)));
  }

  // Theta expression parser round-trips the node times.
  {
    double max_dev = 0.0;
    for (int n = 2; n <= 10; ++n) {
      for (int k = 1; k <= 3; ++k) {
        std::ostringstream expr;
        expr << k << "*pi/sqrt(" << 4 * n - 2 << ")";
        max_dev = std::max(max_dev, std::abs(eval_theta(expr.str()) -
                                             closed_form::node_time(n, k)));
      }
    }
    checks.push_back(
        deviation_check("theta parser round-trips node times", max_dev, 1e-15));
  }

  // n=9 evolution-time candidates: both drive F toward one; only the node
  // rule keeps the success probability at its 1/n floor.
  {
    const double t_node = closed_form::node_time(9, 1);
    const double t_alt = M_PI / std::sqrt(32.0);
    const auto pf_node = closed_form::p_and_f(9, t_node, 8);
    const auto pf_alt = closed_form::p_and_f(9, t_alt, 8);
    const double p_node_20 = closed_form::p_and_f(9, t_node, 20).p;
    const double p_alt_20 = closed_form::p_and_f(9, t_alt, 20).p;
    CheckResult r;
    r.name = "n=9 time candidates pi/sqrt(34) vs pi/sqrt(32)";
    r.observed = std::min(pf_node.f, pf_alt.f);
    r.expected = 1.0;
    r.tolerance = 1e-3;
    r.passed = pf_node.f > 0.999 && pf_alt.f > 0.999 && p_node_20 > 0.111 &&
               p_alt_20 < p_node_20;
    r.detail = "F_8(node)=" + fmt_num(pf_node.f) + " F_8(alt)=" + fmt_num(pf_alt.f) +
               " P_20(node)=" + fmt_num(p_node_20) +
               " P_20(alt)=" + fmt_num(p_alt_20);
    checks.push_back(r);
  }

  return checks;
}

}  // namespace qwtrap

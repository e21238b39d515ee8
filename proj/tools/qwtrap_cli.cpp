// Command-line front end; talks to the simulator exclusively through the
// shared library's C interface.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwtrap.h"

namespace {

// Relative output paths are placed under QWTRAP_OUT_DIR when set.
std::string resolve_out(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("QWTRAP_OUT_DIR");
  if (!dir || !*dir) return path;
  std::filesystem::path base(dir);
  std::error_code ec;
  std::filesystem::create_directories(base, ec);
  return (base / p).string();
}

int report_failure(qwt_status status, const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), qwt_last_error());
  return status == QWT_ERR_PARAM ? 2 : 1;
}

std::string default_initial(int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  bits[0] = '1';
  return "ket:" + bits;
}

std::string default_target(int n) {
  return n == 2 ? std::string("singlet:0,1") : std::string("w1");
}

struct ThetaOption {
  std::string expr = "";
  double value = 0.0;

  int evaluate() {
    if (const qwt_status st = qwt_eval_theta(expr.c_str(), &value)) {
      return report_failure(st, "evaluating --theta '" + expr + "'");
    }
    return 0;
  }
};

int run_protocol(int n, ThetaOption& theta, int reps, int monitor,
                 std::string initial, std::string target,
                 const std::string& out, const std::string& format) {
  if (int rc = theta.evaluate()) return rc;
  if (initial.empty()) initial = default_initial(n);
  if (target.empty()) target = default_target(n);

  qwt_trace* trace = nullptr;
  qwt_status st = qwt_protocol_run(n, theta.value, reps, monitor,
                                   initial.c_str(), target.c_str(), &trace);
  if (st != QWT_OK) return report_failure(st, "running protocol");

  const std::string path = resolve_out(out);
  st = qwt_trace_write(trace, path.c_str(), format.c_str());
  if (st != QWT_OK) {
    qwt_trace_free(trace);
    return report_failure(st, "writing " + path);
  }

  const int len = qwt_trace_length(trace);
  if (len > 0) {
    double p = 0, f = 0, y = 0;
    qwt_trace_row(trace, len - 1, &p, &f, &y);
    std::printf("N=%d  P=%.9f  F=%.9f  Y=%.9f  -> %s\n", len - 1, p, f, y,
                path.c_str());
  }
  if (qwt_trace_extinct(trace)) {
    std::printf("note: success weight underflowed; trace truncated at %d rows\n",
                len);
  }
  qwt_trace_free(trace);
  return 0;
}

int run_trajectories_cmd(int n, ThetaOption& theta, int reps, int monitor,
                         std::string initial, long samples, std::uint64_t seed,
                         const std::string& out, const std::string& format) {
  if (int rc = theta.evaluate()) return rc;
  if (initial.empty()) initial = default_initial(n);

  qwt_stats* stats = nullptr;
  qwt_status st = qwt_trajectories_run(n, theta.value, reps, monitor,
                                       initial.c_str(), samples, seed, &stats);
  if (st != QWT_OK) return report_failure(st, "running trajectories");

  const std::string path = resolve_out(out);
  st = qwt_stats_write(stats, path.c_str(), format.c_str());
  if (st != QWT_OK) {
    qwt_stats_free(stats);
    return report_failure(st, "writing " + path);
  }
  std::printf("samples=%ld successes=%ld rate=%.6f stderr=%.6f -> %s\n",
              qwt_stats_samples(stats), qwt_stats_successes(stats),
              qwt_stats_rate(stats), qwt_stats_stderr(stats), path.c_str());
  qwt_stats_free(stats);
  return 0;
}

int run_initialize(int n, ThetaOption& theta, int reps,
                   const std::string& initial, const std::string& out,
                   const std::string& format) {
  if (int rc = theta.evaluate()) return rc;

  qwt_trace* trace = nullptr;
  qwt_status st =
      qwt_initialize_run(n, theta.value, reps, initial.c_str(), &trace);
  if (st != QWT_OK) return report_failure(st, "running initialization");

  const std::string path = resolve_out(out);
  st = qwt_trace_write(trace, path.c_str(), format.c_str());
  if (st != QWT_OK) {
    qwt_trace_free(trace);
    return report_failure(st, "writing " + path);
  }
  const int len = qwt_trace_length(trace);
  if (len > 0) {
    double p = 0, f = 0, y = 0;
    qwt_trace_row(trace, len - 1, &p, &f, &y);
    std::printf("N=%d  P=%.9f  vacuum F=%.9f  -> %s\n", len - 1, p, f,
                path.c_str());
  }
  qwt_trace_free(trace);
  return 0;
}

int run_spectrum(int n, int photons, ThetaOption& theta, double cluster_tol,
                 double unit_tol, const std::string& out) {
  if (int rc = theta.evaluate()) return rc;

  qwt_spectrum* spec = nullptr;
  qwt_status st =
      qwt_spectrum_compute(n, photons, theta.value, cluster_tol, unit_tol, &spec);
  if (st != QWT_OK) return report_failure(st, "computing spectrum");

  const std::string path = resolve_out(out);
  st = qwt_spectrum_write(spec, path.c_str());
  if (st != QWT_OK) {
    qwt_spectrum_free(spec);
    return report_failure(st, "writing " + path);
  }
  std::printf("eigenvalues=%d unit-magnitude=%d -> %s\n",
              qwt_spectrum_size(spec), qwt_spectrum_unit_count(spec),
              path.c_str());
  qwt_spectrum_free(spec);
  return 0;
}

int run_figure2(const std::string& out, int reps) {
  const std::string path = resolve_out(out);
  const qwt_status st = qwt_figure2_write(path.c_str(), reps);
  if (st != QWT_OK) return report_failure(st, "writing " + path);
  std::printf("figure written -> %s\n", path.c_str());
  return 0;
}

int run_verify() {
  qwt_report* report = nullptr;
  const qwt_status st = qwt_verify_run(&report);
  if (st != QWT_OK) return report_failure(st, "running verification");

  int failures = 0;
  const int count = qwt_report_size(report);
  for (int i = 0; i < count; ++i) {
    const bool ok = qwt_report_passed(report, i) != 0;
    if (!ok) ++failures;
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", qwt_report_name(report, i));
    if (!ok) std::printf("       %s\n", qwt_report_detail(report, i));
  }
  std::printf("%d/%d checks passed\n", count - failures, count);
  qwt_report_free(report);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qwtrap: conditional-measurement entanglement generation "
               "for cavity-coupled emitters"};
  app.require_subcommand(1);

  int n = 3;
  int reps = 10;
  int monitor = 1;
  int photons = 1;
  long samples = 100000;
  std::uint64_t seed = 1;
  double cluster_tol = 1e-8;
  double unit_tol = 1e-8;
  std::string initial;
  std::string target;
  std::string out;
  std::string format;
  ThetaOption theta;

  auto add_theta = [&theta](CLI::App* cmd) {
    cmd->add_option("--theta", theta.expr,
                    "evolution time; expression like \"pi/sqrt(10)\"")
        ->required();
  };

  CLI::App* protocol = app.add_subcommand(
      "protocol", "deterministic repeated conditional measurement");
  protocol->add_option("--n", n, "emitter count")->required();
  add_theta(protocol);
  protocol->add_option("--reps", reps, "number of repetitions N");
  protocol->add_option("--monitor", monitor, "monitored photon count");
  protocol->add_option("--initial", initial, "initial state descriptor");
  protocol->add_option("--target", target, "target state descriptor");
  protocol->add_option("--out", out, "output file")->capture_default_str();
  protocol->add_option("--format", format, "csv or json");

  CLI::App* trajectories = app.add_subcommand(
      "trajectories", "Monte Carlo sampling of measurement outcomes");
  trajectories->add_option("--n", n, "emitter count")->required();
  add_theta(trajectories);
  trajectories->add_option("--reps", reps, "consecutive successes required");
  trajectories->add_option("--monitor", monitor, "monitored photon count");
  trajectories->add_option("--initial", initial, "initial state descriptor");
  trajectories->add_option("--samples", samples, "trajectory count");
  trajectories->add_option("--seed", seed, "RNG seed");
  trajectories->add_option("--out", out, "output file");
  trajectories->add_option("--format", format, "json or csv");

  CLI::App* initialize = app.add_subcommand(
      "initialize", "two-photon monitoring toward the vacuum");
  initialize->add_option("--n", n, "emitter count")->required();
  add_theta(initialize);
  initialize->add_option("--reps", reps, "number of repetitions N");
  initialize->add_option("--initial", initial, "initial state descriptor");
  initialize->add_option("--out", out, "output file");
  initialize->add_option("--format", format, "csv or json");

  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "eigenvalues of the conditional operator");
  spectrum_cmd->add_option("--n", n, "emitter count")->required();
  add_theta(spectrum_cmd);
  spectrum_cmd->add_option("--photons", photons, "monitored photon count");
  spectrum_cmd->add_option("--cluster-tol", cluster_tol, "degeneracy tolerance");
  spectrum_cmd->add_option("--unit-tol", unit_tol, "unit-magnitude tolerance");
  spectrum_cmd->add_option("--out", out, "output file");

  int fig_reps = 12;
  CLI::App* figure2 = app.add_subcommand(
      "figure2", "fidelity/yield curves for n = 3, 6, 9");
  figure2->add_option("--out", out, "output SVG file");
  figure2->add_option("--reps", fig_reps, "largest repetition count plotted");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the analytic-vs-numeric check suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (protocol->parsed()) {
    if (out.empty()) out = "trace.csv";
    if (format.empty()) format = "csv";
    return run_protocol(n, theta, reps, monitor, initial, target, out, format);
  }
  if (trajectories->parsed()) {
    if (out.empty()) out = "stats.json";
    if (format.empty()) format = "json";
    return run_trajectories_cmd(n, theta, reps, monitor, initial, samples, seed,
                                out, format);
  }
  if (initialize->parsed()) {
    if (out.empty()) out = "initialize.csv";
    if (format.empty()) format = "csv";
    if (initial.empty()) initial = "mixed";
    return run_initialize(n, theta, reps, initial, out, format);
  }
  if (spectrum_cmd->parsed()) {
    if (out.empty()) out = "spectrum.json";
    return run_spectrum(n, photons, theta, cluster_tol, unit_tol, out);
  }
  if (figure2->parsed()) {
    if (out.empty()) out = "figure2.svg";
    return run_figure2(out, fig_reps);
  }
  if (verify->parsed()) return run_verify();
  return 2;
}

#include "qwtrap.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/closed_form.hpp"
#include "core/conditional.hpp"
#include "core/descriptor.hpp"
#include "core/figure2.hpp"
#include "core/protocol.hpp"
#include "core/serialize.hpp"
#include "core/spectral.hpp"
#include "core/svg.hpp"
#include "core/theta_expr.hpp"
#include "core/trajectory.hpp"
#include "core/verify.hpp"

struct qwt_trace {
  qwtrap::ProtocolTrace trace;
};

struct qwt_stats {
  qwtrap::TrajectoryStats stats;
};

struct qwt_spectrum {
  qwtrap::SpectralReport report;
};

struct qwt_report {
  std::vector<qwtrap::CheckResult> checks;
  std::vector<std::string> details;  // formatted, stable storage for C strings
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Maps C++ failures onto status codes; parameter problems arrive as
// std::invalid_argument, I/O problems as std::runtime_error from the
// writers, everything else counts as numeric.
template <typename Fn>
qwt_status guarded(Fn&& fn, qwt_status io_or_numeric = QWT_ERR_NUMERIC) {
  try {
    fn();
    return QWT_OK;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QWT_ERR_PARAM;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return QWT_ERR_NUMERIC;
  } catch (const std::exception& e) {
    set_error(e.what());
    return io_or_numeric;
  } catch (...) {
    set_error("unknown error");
    return io_or_numeric;
  }
}

qwt_status require(bool ok, const char* message) {
  if (!ok) {
    set_error(message);
    return QWT_ERR_PARAM;
  }
  return QWT_OK;
}

std::string detail_line(const qwtrap::CheckResult& check) {
  std::string s = "observed=" + std::to_string(check.observed) +
                  " expected=" + std::to_string(check.expected) +
                  " tol=" + std::to_string(check.tolerance);
  if (!check.detail.empty()) s += " (" + check.detail + ")";
  return s;
}

}  // namespace

extern "C" {

const char* qwt_version(void) { return "0.1.0"; }

const char* qwt_last_error(void) { return g_last_error.c_str(); }

qwt_status qwt_eval_theta(const char* expr, double* out) {
  if (auto st = require(expr && out, "expr and out must be non-null")) return st;
  return guarded([&] { *out = qwtrap::eval_theta(expr); });
}

qwt_status qwt_node_time(int n, int k, double* out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] { *out = qwtrap::closed_form::node_time(n, k); });
}

qwt_status qwt_closed_pf(int n, double theta, int reps, double* p, double* f) {
  if (auto st = require(p && f, "p and f must be non-null")) return st;
  return guarded([&] {
    const auto pf = qwtrap::closed_form::p_and_f(n, theta, reps);
    *p = pf.p;
    *f = pf.f;
  });
}

qwt_status qwt_closed_pf_two_qw(int m, double theta, int reps, int as_printed,
                                double* p, double* f) {
  if (auto st = require(p && f, "p and f must be non-null")) return st;
  return guarded([&] {
    const auto pf =
        qwtrap::closed_form::p_and_f_two_qw(m, theta, reps, as_printed != 0);
    *p = pf.p;
    *f = pf.f;
  });
}

qwt_status qwt_superop_eigenvalue(const char* kind, int n, double theta,
                                  double* out) {
  if (auto st = require(kind && out, "kind and out must be non-null")) return st;
  return guarded([&] {
    using qwtrap::closed_form::EigKind;
    EigKind k;
    if (std::strcmp(kind, "w1") == 0) {
      k = EigKind::W1;
    } else if (std::strcmp(kind, "bright_t") == 0) {
      k = EigKind::BrightT;
    } else if (std::strcmp(kind, "vacuum_2photon") == 0) {
      k = EigKind::Vacuum2Photon;
    } else {
      throw std::invalid_argument(std::string("unknown eigenvalue kind '") +
                                  kind + "'");
    }
    *out = qwtrap::closed_form::superop_eigenvalue(k, n, theta);
  });
}

qwt_status qwt_chain_amplitudes(int n, double t, double re[3], double im[3]) {
  if (auto st = require(re && im, "re and im must be non-null")) return st;
  return guarded([&] {
    const auto amps = qwtrap::closed_form::chain_amplitudes(n, t);
    re[0] = amps.mid.real();
    im[0] = amps.mid.imag();
    re[1] = amps.up.real();
    im[1] = amps.up.imag();
    re[2] = amps.down.real();
    im[2] = amps.down.imag();
  });
}

qwt_status qwt_purification_yield(int n, double theta, int reps, double* out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded(
      [&] { *out = qwtrap::closed_form::purification_yield(n, theta, reps); });
}

qwt_status qwt_completeness_defect(int n, int p_in, double theta, double* out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded(
      [&] { *out = qwtrap::completeness_defect(n, p_in, theta); });
}

qwt_status qwt_rabi_amplitudes(int n, int quanta, double t, double re[3],
                               double im[3]) {
  if (auto st = require(re && im, "re and im must be non-null")) return st;
  return guarded([&] {
    const auto amps = qwtrap::rabi_amplitudes(n, quanta, t);
    re[0] = amps.stay.real();
    im[0] = amps.stay.imag();
    re[1] = amps.vacuum_up.real();
    im[1] = amps.vacuum_up.imag();
    re[2] = amps.phi_down.real();
    im[2] = amps.phi_down.imag();
  });
}

qwt_status qwt_protocol_run(int n, double theta, int reps, int monitor,
                            const char* initial, const char* target,
                            qwt_trace** out) {
  if (auto st = require(initial && target && out,
                        "initial, target and out must be non-null")) {
    return st;
  }
  return guarded([&] {
    const auto initial_state = qwtrap::parse_state(initial, n);
    const qwtrap::PureState target_state = qwtrap::parse_pure_state(target, n);
    qwtrap::ProtocolTrace trace;
    if (std::holds_alternative<qwtrap::PureState>(initial_state)) {
      trace = qwtrap::run_conditional(std::get<qwtrap::PureState>(initial_state),
                                      theta, reps, monitor, target_state);
    } else {
      trace = qwtrap::run_conditional(
          std::get<qwtrap::DensityMatrix>(initial_state), theta, reps, monitor,
          target_state);
    }
    trace.config.initial = initial;
    trace.config.target = target;
    *out = new qwt_trace{std::move(trace)};
  });
}

qwt_status qwt_initialize_run(int n, double theta, int reps,
                              const char* initial, qwt_trace** out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    const std::string descriptor = initial ? initial : "mixed";
    qwtrap::ProtocolTrace trace = qwtrap::initialize_two_photon(
        qwtrap::as_density(qwtrap::parse_state(descriptor, n)), theta, reps);
    trace.config.initial = descriptor;
    *out = new qwt_trace{std::move(trace)};
  });
}

int qwt_trace_length(const qwt_trace* trace) {
  return trace ? static_cast<int>(trace->trace.steps.size()) : 0;
}

int qwt_trace_extinct(const qwt_trace* trace) {
  return (trace && trace->trace.extinct) ? 1 : 0;
}

qwt_status qwt_trace_row(const qwt_trace* trace, int i, double* p, double* f,
                         double* y) {
  if (auto st = require(trace && p && f && y, "null argument")) return st;
  if (auto st = require(i >= 0 && i < qwt_trace_length(trace),
                        "row index out of range")) {
    return st;
  }
  const auto& step = trace->trace.steps[static_cast<std::size_t>(i)];
  *p = step.success_probability;
  *f = step.fidelity;
  *y = step.yield;
  return QWT_OK;
}

qwt_status qwt_trace_write(const qwt_trace* trace, const char* path,
                           const char* format) {
  if (auto st = require(trace && path && format, "null argument")) return st;
  return guarded(
      [&] {
        const std::string fmt = format;
        if (fmt == "csv") {
          qwtrap::write_text_file(path, qwtrap::trace_csv(trace->trace));
        } else if (fmt == "json") {
          qwtrap::write_text_file(path,
                                  qwtrap::to_json(trace->trace).dump(2) + "\n");
        } else {
          throw std::invalid_argument("format must be csv or json");
        }
      },
      QWT_ERR_IO);
}

void qwt_trace_free(qwt_trace* trace) { delete trace; }

qwt_status qwt_trajectories_run(int n, double theta, int reps, int monitor,
                                const char* initial, long samples,
                                uint64_t seed, qwt_stats** out) {
  if (auto st = require(initial && out, "initial and out must be non-null")) {
    return st;
  }
  return guarded([&] {
    const auto initial_state = qwtrap::parse_state(initial, n);
    qwtrap::TrajectoryStats stats;
    if (std::holds_alternative<qwtrap::PureState>(initial_state)) {
      stats = qwtrap::run_trajectories(std::get<qwtrap::PureState>(initial_state),
                                       theta, reps, monitor, samples, seed);
    } else {
      stats = qwtrap::run_trajectories(
          std::get<qwtrap::DensityMatrix>(initial_state), theta, reps, monitor,
          samples, seed);
    }
    stats.config.initial = initial;
    *out = new qwt_stats{std::move(stats)};
  });
}

long qwt_stats_samples(const qwt_stats* stats) {
  return stats ? stats->stats.samples : 0;
}

long qwt_stats_successes(const qwt_stats* stats) {
  return stats ? stats->stats.successes : 0;
}

double qwt_stats_rate(const qwt_stats* stats) {
  return stats ? stats->stats.rate : 0.0;
}

double qwt_stats_stderr(const qwt_stats* stats) {
  return stats ? stats->stats.stderr_binomial : 0.0;
}

qwt_status qwt_stats_write(const qwt_stats* stats, const char* path,
                           const char* format) {
  if (auto st = require(stats && path && format, "null argument")) return st;
  return guarded(
      [&] {
        const std::string fmt = format;
        if (fmt == "json") {
          qwtrap::write_text_file(path,
                                  qwtrap::to_json(stats->stats).dump(2) + "\n");
        } else if (fmt == "csv") {
          qwtrap::write_text_file(path, qwtrap::stats_csv(stats->stats));
        } else {
          throw std::invalid_argument("format must be csv or json");
        }
      },
      QWT_ERR_IO);
}

void qwt_stats_free(qwt_stats* stats) { delete stats; }

qwt_status qwt_spectrum_compute(int n, int photons, double theta,
                                double cluster_tol, double unit_tol,
                                qwt_spectrum** out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    const qwtrap::ConditionalOperator op(n, photons, photons, theta);
    *out = new qwt_spectrum{qwtrap::spectrum(op, cluster_tol, unit_tol)};
  });
}

int qwt_spectrum_size(const qwt_spectrum* spec) {
  return spec ? static_cast<int>(spec->report.eigenvalues.size()) : 0;
}

qwt_status qwt_spectrum_eigenvalue(const qwt_spectrum* spec, int i, double* re,
                                   double* im) {
  if (auto st = require(spec && re && im, "null argument")) return st;
  if (auto st = require(i >= 0 && i < qwt_spectrum_size(spec),
                        "eigenvalue index out of range")) {
    return st;
  }
  const auto& v = spec->report.eigenvalues[static_cast<std::size_t>(i)];
  *re = v.real();
  *im = v.imag();
  return QWT_OK;
}

int qwt_spectrum_unit_count(const qwt_spectrum* spec) {
  return spec ? spec->report.unit_multiplicity() : 0;
}

int qwt_spectrum_unit_count_in_excitation(const qwt_spectrum* spec, int k) {
  return spec ? spec->report.unit_multiplicity_in_excitation(k) : 0;
}

qwt_status qwt_spectrum_write(const qwt_spectrum* spec, const char* path) {
  if (auto st = require(spec && path, "null argument")) return st;
  return guarded(
      [&] {
        qwtrap::write_text_file(path,
                                qwtrap::to_json(spec->report).dump(2) + "\n");
      },
      QWT_ERR_IO);
}

void qwt_spectrum_free(qwt_spectrum* spec) { delete spec; }

qwt_status qwt_figure2_write(const char* path, int max_reps) {
  if (auto st = require(path != nullptr, "path must be non-null")) return st;
  return guarded(
      [&] {
        if (max_reps < 1) throw std::invalid_argument("max_reps must be >= 1");
        qwtrap::write_text_file(path, qwtrap::figure2_svg(max_reps));
      },
      QWT_ERR_IO);
}

qwt_status qwt_chart_write(const char* path, const char* const* labels,
                           const double* const* xs, const double* const* ys,
                           const int* lengths, int series_count,
                           const char* title, const char* x_label,
                           const char* y_label) {
  if (auto st = require(path && labels && xs && ys && lengths, "null argument")) {
    return st;
  }
  return guarded(
      [&] {
        std::vector<qwtrap::Series> series;
        for (int i = 0; i < series_count; ++i) {
          qwtrap::Series s;
          s.label = labels[i] ? labels[i] : "";
          s.x.assign(xs[i], xs[i] + lengths[i]);
          s.y.assign(ys[i], ys[i] + lengths[i]);
          series.push_back(std::move(s));
        }
        qwtrap::ChartOptions options;
        if (title) options.title = title;
        if (x_label) options.x_label = x_label;
        if (y_label) options.y_label = y_label;
        qwtrap::write_text_file(path, qwtrap::render_chart(series, options));
      },
      QWT_ERR_IO);
}

qwt_status qwt_verify_run(qwt_report** out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    auto report = std::make_unique<qwt_report>();
    report->checks = qwtrap::run_verification();
    report->details.reserve(report->checks.size());
    for (const auto& check : report->checks) {
      report->details.push_back(detail_line(check));
    }
    *out = report.release();
  });
}

int qwt_report_size(const qwt_report* report) {
  return report ? static_cast<int>(report->checks.size()) : 0;
}

int qwt_report_passed(const qwt_report* report, int i) {
  if (!report || i < 0 || i >= qwt_report_size(report)) return 0;
  return report->checks[static_cast<std::size_t>(i)].passed ? 1 : 0;
}

const char* qwt_report_name(const qwt_report* report, int i) {
  if (!report || i < 0 || i >= qwt_report_size(report)) return "";
  return report->checks[static_cast<std::size_t>(i)].name.c_str();
}

const char* qwt_report_detail(const qwt_report* report, int i) {
  if (!report || i < 0 || i >= qwt_report_size(report)) return "";
  return report->details[static_cast<std::size_t>(i)].c_str();
}

void qwt_report_free(qwt_report* report) { delete report; }

}  // extern "C"

#include "core/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwtrap::closed_form {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// c^{2N} with a negative-safe even power.
double pow_even(double c, int reps) {
  return std::pow(c * c, static_cast<double>(reps));
}

}  // namespace

PF p_and_f(int n, double theta, int reps) {
  require(n >= 2, "p_and_f requires n >= 2");
  require(reps >= 0, "repetition count must be non-negative");
  const double cw = std::cos(std::sqrt(4.0 * n - 2.0) * theta);
  const double ct = std::cos(std::sqrt(static_cast<double>(n - 2)) * theta);
  const double cw2n = pow_even(cw, reps);
  const double ct2n = pow_even(ct, reps);
  const double p = (cw2n + (n - 1) * ct2n) / n;
  // n = 2: the survivor is the singlet (the ct branch, identically 1), so
  // the fidelity is its relative weight 1/(2P) rather than the W1 weight.
  const double f = (n == 2) ? 1.0 / (2.0 * p) : cw2n / (n * p);
  return {p, f};
}

PF p_and_f_two_qw(int m, double theta, int reps, bool as_printed) {
  require(m >= 1, "photon count m must be >= 1");
  require(reps >= 0, "repetition count must be non-negative");
  const double c = std::cos(std::sqrt(2.0 * (2.0 * m + 1.0)) * theta);
  const double c2n = pow_even(c, reps);
  const double p = 0.5 * (1.0 + c2n);
  const double f = as_printed ? 1.0 / (2.0 * c2n) : 1.0 / (2.0 * p);
  return {p, f};
}

double superop_eigenvalue(EigKind kind, int n, double theta) {
  require(n >= 2, "superop_eigenvalue requires n >= 2");
  switch (kind) {
    case EigKind::W1:
      return std::cos(std::sqrt(4.0 * n - 2.0) * theta);
    case EigKind::BrightT:
      require(n >= 3, "BrightT eigenvalue requires n >= 3");
      return std::cos(std::sqrt(static_cast<double>(n - 2)) * theta);
    case EigKind::Vacuum2Photon: {
      const double c = std::cos(std::sqrt(4.0 * n - 2.0) * theta);
      return (n * (c + 1.0) - 1.0) / (2.0 * n - 1.0);
    }
  }
  throw std::invalid_argument("unknown eigenvalue kind");
}

ChainAmplitudes chain_amplitudes(int n, double t) {
  require(n >= 2, "chain_amplitudes requires n >= 2");
  const double omega = std::sqrt(4.0 * n - 2.0);
  const double s = std::sin(omega * t);
  const std::complex<double> mi(0.0, -1.0);
  return {std::cos(omega * t), mi * s * std::sqrt(2.0 * n) / omega,
          mi * s * std::sqrt(2.0 * (n - 1.0)) / omega};
}

double purification_yield(int n, double theta, int reps) {
  require(reps >= 0, "repetition count must be non-negative");
  double y = 1.0;
  for (int i = 0; i <= reps; ++i) y *= p_and_f(n, theta, i).p;
  return y;
}

double node_time(int n, int k) {
  require(n >= 2, "node_time requires n >= 2");
  require(k >= 1, "node index must be positive");
  return k * M_PI / std::sqrt(4.0 * n - 2.0);
}

}  // namespace qwtrap::closed_form

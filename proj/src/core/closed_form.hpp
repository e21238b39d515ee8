#pragma once

#include <complex>

namespace qwtrap::closed_form {

struct PF {
  double p = 1.0;
  double f = 1.0;
};

// Success probability and fidelity after `reps` successful single-photon
// measurements from a one-excitation product start. For n >= 3 the target
// is the single-excitation W state; for n = 2 it is the pairwise singlet
// and F reduces to 1/(2P).
PF p_and_f(int n, double theta, int reps);

// Two-emitter protocol monitored on the m-photon cavity state.
// The printed fidelity 1/(2 c^{2N}) exceeds one for large N; the default
// is the self-consistent 1/(2P) and the printed form sits behind the flag.
PF p_and_f_two_qw(int m, double theta, int reps, bool as_printed = false);

enum class EigKind {
  W1,             // cos(sqrt(4n-2) theta)
  BrightT,        // cos(sqrt(n-2) theta), n >= 3
  Vacuum2Photon,  // (n(cos(sqrt(4n-2) theta)+1)-1)/(2n-1)
};

double superop_eigenvalue(EigKind kind, int n, double theta);

// Amplitudes of the three-state chain |0..0,2> -- |W1,1> -- |phi,0> with
// couplings sqrt(2n) and sqrt(2(n-1)), Rabi frequency sqrt(4n-2).
struct ChainAmplitudes {
  std::complex<double> mid;   // stay on |W1,1>
  std::complex<double> up;    // onto |0..0,2>
  std::complex<double> down;  // onto |phi,0>
};

ChainAmplitudes chain_amplitudes(int n, double t);

// Product of the cumulative success probabilities P_0..P_N, as printed.
double purification_yield(int n, double theta, int reps);

// k-th theta at which the W1 eigenvalue has unit magnitude.
double node_time(int n, int k);

}  // namespace qwtrap::closed_form

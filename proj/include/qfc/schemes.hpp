#pragma once

#include "qfc/channels.hpp"

namespace qfc {

struct TaskParams {
    // Validates p in [0, 0.5] and theta in [0, pi/2].
    TaskParams(double p_in, double theta_in);
    double p;
    double theta;
    // x component of the Bloch vector of either input after the noise.
    double rx() const;
};

struct QuantumControlParams {
    // Validates chi and eta in [0, pi/2].
    QuantumControlParams(double chi_in, double eta_in);
    double chi;
    double eta;
};

// The oracle every closed form below is checked against: full density-matrix
// simulation of noise followed by the control channel, averaged over the two
// equally likely inputs.
double average_fidelity(const KrausChannel& control, const TaskParams& task);

// 1 - p cos^2(theta).
double do_nothing_fidelity(const TaskParams& task);

// Best z-basis discrimination success probability, (1 + sin(theta))/2.
// Independent of the noise strength.
double helstrom_probability(double theta);

// Discriminate-and-reprepare: z-basis measurement, then reprepare the guessed
// input (variant 1) or the hedged pair biased toward it (variant 2).
KrausChannel dr_channel(int variant, double theta);
double dr_fidelity(int variant, double theta);

// Feedback angle returning both post-measurement states to the xz plane:
// tan(eta) = 1 / (rx tan(chi)), with eta = 0 at chi = pi/2 and eta = pi/2 at
// chi = 0 or rx = 0.
double eta_opt(const TaskParams& task, double chi);

// Weak measurement of strength chi followed by the outcome-conditioned
// feedback rotation Z_{+eta} / Z_{-eta}.
KrausChannel quantum_control_channel(const TaskParams& task, double chi);

// Closed form for the average fidelity of the feedback scheme at strength chi.
double fqc(const TaskParams& task, double chi);

// Optimal measurement strength. p = 0 gives pi/2 (measure nothing),
// theta = 0 gives 0 (projective).
double chi_opt(const TaskParams& task);

// fqc at chi_opt; 1 at the degenerate corner p = 0, theta = 0.
double fqc_opt(const TaskParams& task);

// Advantage of the feedback scheme over the best of do-nothing and variant 2.
double f_dif(const TaskParams& task);

}  // namespace qfc

#pragma once

#include <array>
#include <cstdint>

#include "qfc/schemes.hpp"

namespace qfc {

// R = 1/2 sum_i E_p(|psi_i><psi_i|) ⊗ |psi_i><psi_i|, ordering (in ⊗ out).
// The average fidelity of any channel is Tr[R Y] with Y its Choi matrix.
struct RMatrix {
    ComplexMatrix matrix;
    TaskParams params;
};
RMatrix r_matrix(const TaskParams& task);

double objective(const RMatrix& r, const ChoiMatrix& upsilon);

// Analytic dual feasible point for the unconstrained-channel problem.
// Feasibility matrix b0 I⊗I + bx X⊗I - R is PSD; bound = 2 b0 upper-bounds
// the fidelity of every channel and equals fqc_opt, so the feedback scheme is
// optimal. The corner p = 0, theta = 0 is degenerate (bound 1, no slack
// check).
struct QuantumDualCertificate {
    double b0 = 0.0;
    double bx = 0.0;
    double min_eig_slack = 0.0;
    double bound = 0.0;
    bool degenerate = false;
};
QuantumDualCertificate quantum_dual(const TaskParams& task);

// Analytic dual feasible point for the measure-and-reprepare restriction.
// Feasibility matrix a0 I⊗I + ax X⊗I + ay Y⊗Y - R is PSD; bound = 2 a0
// equals the variant 2 fidelity.
struct ClassicalDualCertificate {
    double a0 = 0.0;
    double ax = 0.0;
    double ay = 0.0;
    double min_eig_slack = 0.0;
    double bound = 0.0;
};
ClassicalDualCertificate classical_dual(const TaskParams& task);

// Diagnostics of the feasible set: min eigenvalue of Y, max-entry residual of
// Tr_out Y - I, min eigenvalue of the partial transpose, and the residuals
// |Tr[(A ⊗ Y_pauli) Y]| for A in {I, X, Y, Z} that an invariant
// measure-and-reprepare optimum satisfies.
struct ChoiConstraintReport {
    double psd_slack = 0.0;
    double tp_residual = 0.0;
    double ppt_slack = 0.0;
    std::array<double, 4> equality_residuals{};
};
ChoiConstraintReport verify_choi_constraints(const ChoiMatrix& upsilon);

// One Haar-like random channel: orthonormalize a seeded 8x8 complex Gaussian
// matrix (splitmix64 stream) and read four 2x2 Kraus blocks off the first two
// columns. Deterministic per seed.
KrausChannel random_cptp_channel(std::uint64_t seed);

// Best average fidelity over n such channels, sample i drawn with seed + i.
struct OracleResult {
    double max_fidelity = 0.0;
    std::int64_t best_index = -1;
};
OracleResult random_cptp_oracle(const TaskParams& task, std::int64_t n_samples, std::uint64_t seed);

}  // namespace qfc

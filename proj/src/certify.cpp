#include "qfc/certify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfc {

namespace {

double one_minus_rx_sq(const TaskParams& task) {
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    return s * s + 4.0 * task.p * (1.0 - task.p) * c * c;
}

// Deterministic 64-bit stream used by the random channel oracle.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Uniform in (0, 1], safe under log.
    double uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
};

double gaussian(SplitMix64& gen) {
    const double u1 = gen.uniform();
    const double u2 = gen.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

RMatrix r_matrix(const TaskParams& task) {
    const KrausChannel noise = dephasing(task.p);
    ComplexMatrix acc(4);
    for (int which = 1; which <= 2; ++which) {
        const PureState psi = prepare_input(task.theta, which);
        const DensityMatrix noisy = apply(noise, DensityMatrix::from_pure(psi));
        acc += kron(noisy.matrix(), psi.projector());
    }
    acc *= cplx(0.5, 0.0);
    return RMatrix{acc, task};
}

double objective(const RMatrix& r, const ChoiMatrix& upsilon) {
    return (r.matrix * upsilon.matrix).trace().real();
}

QuantumDualCertificate quantum_dual(const TaskParams& task) {
    QuantumDualCertificate cert;
    const double w = one_minus_rx_sq(task);
    if (w == 0.0) {
        // p = 0, theta = 0: the bound degenerates to the exact value 1.
        cert.b0 = 0.5;
        cert.bx = 0.5;
        cert.bound = 1.0;
        cert.degenerate = true;
        return cert;
    }
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    cert.b0 = 0.25 + 0.25 * std::sqrt(c * c + s * s * s * s / w);
    cert.bx = task.rx() * cert.b0;
    cert.bound = 2.0 * cert.b0;

    ComplexMatrix feas = ComplexMatrix::identity(4);
    feas *= cert.b0;
    ComplexMatrix xi = kron(pauli(Axis::x), ComplexMatrix::identity(2));
    xi *= cert.bx;
    feas += xi;
    feas -= r_matrix(task).matrix;
    cert.min_eig_slack = eig_hermitian(feas).front();
    return cert;
}

ClassicalDualCertificate classical_dual(const TaskParams& task) {
    ClassicalDualCertificate cert;
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    const double g = std::sqrt(c * c + s * s * s * s);
    const double rx = task.rx();
    cert.a0 = 0.25 + 0.25 * g;
    cert.ax = 0.25 * rx * (1.0 + c * c / g);
    cert.ay = -0.25 * rx * c * s * s / g;
    cert.bound = 2.0 * cert.a0;

    ComplexMatrix feas = ComplexMatrix::identity(4);
    feas *= cert.a0;
    ComplexMatrix xi = kron(pauli(Axis::x), ComplexMatrix::identity(2));
    xi *= cert.ax;
    feas += xi;
    ComplexMatrix yy = kron(pauli(Axis::y), pauli(Axis::y));
    yy *= cert.ay;
    feas += yy;
    feas -= r_matrix(task).matrix;
    cert.min_eig_slack = eig_hermitian(feas).front();
    return cert;
}

ChoiConstraintReport verify_choi_constraints(const ChoiMatrix& upsilon) {
    ChoiConstraintReport report;
    report.psd_slack = eig_hermitian(upsilon.matrix).front();
    report.tp_residual = partial_trace(upsilon.matrix, Subsystem::out)
                             .distance(ComplexMatrix::identity(2));
    report.ppt_slack = eig_hermitian(partial_transpose_out(upsilon.matrix)).front();
    const ComplexMatrix paulis[4] = {ComplexMatrix::identity(2), pauli(Axis::x), pauli(Axis::y), pauli(Axis::z)};
    for (int k = 0; k < 4; ++k) {
        report.equality_residuals[static_cast<size_t>(k)] =
            std::abs((kron(paulis[k], pauli(Axis::y)) * upsilon.matrix).trace());
    }
    return report;
}

KrausChannel random_cptp_channel(std::uint64_t seed) {
    SplitMix64 gen{seed};
    // Columns of an 8x8 complex Gaussian matrix, filled column-major.
    cplx cols[8][8];
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) {
            const double re = gaussian(gen);
            const double im = gaussian(gen);
            cols[j][i] = cplx(re, im);
        }
    }
    // Modified Gram-Schmidt with a second pass; the result is Haar-like and
    // exactly deterministic for a fixed seed.
    for (int j = 0; j < 8; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                cplx overlap = 0.0;
                for (int i = 0; i < 8; ++i) overlap += std::conj(cols[k][i]) * cols[j][i];
                for (int i = 0; i < 8; ++i) cols[j][i] -= overlap * cols[k][i];
            }
        }
        double norm = 0.0;
        for (int i = 0; i < 8; ++i) norm += std::norm(cols[j][i]);
        norm = std::sqrt(norm);
        for (int i = 0; i < 8; ++i) cols[j][i] /= norm;
    }
    // Stinespring reading: the first two columns hold four stacked 2x2 blocks,
    // one Kraus operator per environment dimension.
    std::vector<ComplexMatrix> ops;
    for (int e = 0; e < 4; ++e) {
        ComplexMatrix k(2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                k(r, c) = cols[c][2 * e + r];
            }
        }
        ops.push_back(k);
    }
    return KrausChannel(std::move(ops));
}

OracleResult random_cptp_oracle(const TaskParams& task, std::int64_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
    OracleResult result;
    result.max_fidelity = -1.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const KrausChannel channel = random_cptp_channel(seed + static_cast<std::uint64_t>(i));
        const double f = average_fidelity(channel, task);
        if (f > result.max_fidelity) {
            result.max_fidelity = f;
            result.best_index = i;
        }
    }
    return result;
}

}  // namespace qfc

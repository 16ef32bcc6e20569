#include <doctest.h>

#include <cmath>

#include "qfc/certify.hpp"
#include "test_helpers.hpp"

using namespace qfc;

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

TEST_CASE("fidelity operator basics") {
    const TaskParams task(0.145, 0.715);
    const RMatrix r = r_matrix(task);
    CHECK(r.matrix.is_hermitian(1e-13));
    // Tr R = 1: half the sum of two unit-trace products of unit-trace factors
    CHECK(std::abs(r.matrix.trace() - 1.0) < 1e-13);
    // swapping the two inputs is conjugation by X on both factors
    const ComplexMatrix xx = kron(pauli(Axis::x), pauli(Axis::x));
    CHECK((xx * r.matrix * xx).distance(r.matrix) < 1e-13);

    // pairing with a Choi matrix reproduces the simulated average fidelity
    CHECK(std::abs(objective(r, choi(KrausChannel::identity())) - do_nothing_fidelity(task)) < 1e-12);
    CHECK(std::abs(objective(r, choi(dr_channel(2, task.theta))) - dr_fidelity(2, task.theta)) < 1e-11);
    const KrausChannel feedback = quantum_control_channel(task, chi_opt(task));
    CHECK(std::abs(objective(r, choi(feedback)) - fqc_opt(task)) < 1e-11);

    test::Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const KrausChannel chan = random_cptp_channel(500 + static_cast<std::uint64_t>(trial));
        CHECK(std::abs(objective(r, choi(chan)) - average_fidelity(chan, task)) < 1e-11);
    }
}

TEST_CASE("unconstrained dual certificate") {
    for (double p : {0.02, 0.115, 0.3, 0.5}) {
        for (double theta : {0.0, 0.2, 0.715, 1.3, kHalfPi}) {
            const TaskParams task(p, theta);
            const QuantumDualCertificate cert = quantum_dual(task);
            CHECK_FALSE(cert.degenerate);
            CHECK(cert.min_eig_slack >= -1e-9);
            CHECK(std::abs(cert.bound - fqc_opt(task)) <= 1e-12);
            CHECK(std::abs(cert.bx - task.rx() * cert.b0) < 1e-15);
        }
    }

    const QuantumDualCertificate corner = quantum_dual(TaskParams(0.0, 0.0));
    CHECK(corner.degenerate);
    CHECK(corner.bound == 1.0);

    // p = 0 off the corner is still certified (the scheme achieves 1 there)
    const QuantumDualCertificate free_noise = quantum_dual(TaskParams(0.0, 0.715));
    CHECK_FALSE(free_noise.degenerate);
    CHECK(free_noise.min_eig_slack >= -1e-9);
}

TEST_CASE("measure and reprepare dual certificate") {
    for (double p : {0.0, 0.115, 0.3, 0.5}) {
        for (double theta : {0.0, 0.2, 0.715, 1.3, kHalfPi}) {
            const TaskParams task(p, theta);
            const ClassicalDualCertificate cert = classical_dual(task);
            CHECK(cert.min_eig_slack >= -1e-9);
            CHECK(std::abs(cert.bound - dr_fidelity(2, theta)) <= 1e-12);
        }
    }
}

TEST_CASE("weak duality against sampled channels") {
    for (double p : {0.115, 0.3}) {
        for (double theta : {0.3, 0.715}) {
            const TaskParams task(p, theta);
            const RMatrix r = r_matrix(task);
            const double bound = quantum_dual(task).bound;
            for (int i = 0; i < 50; ++i) {
                const double f = objective(r, choi(random_cptp_channel(9000 + static_cast<std::uint64_t>(i))));
                CHECK(f <= bound + 1e-9);
            }
        }
    }
}

TEST_CASE("the two bounds are ordered and tight in the right places") {
    for (double p : {0.05, 0.115, 0.3}) {
        for (double theta : {0.2, 0.715, 1.3}) {
            const TaskParams task(p, theta);
            // restricting to measure-and-reprepare can only lower the optimum
            CHECK(classical_dual(task).bound <= quantum_dual(task).bound + 1e-12);
        }
    }
}

TEST_CASE("choi constraint diagnostics") {
    // the hedged reprepare channel breaks entanglement: all checks clean
    const ChoiConstraintReport dr = verify_choi_constraints(choi(dr_channel(2, 0.715)));
    CHECK(dr.psd_slack >= -1e-12);
    CHECK(dr.tp_residual <= 1e-12);
    CHECK(dr.ppt_slack >= -1e-9);
    for (double res : dr.equality_residuals) CHECK(res <= 1e-12);

    // the identity channel keeps entanglement: the transpose test flags it
    const ChoiConstraintReport ident = verify_choi_constraints(choi(KrausChannel::identity()));
    CHECK(ident.psd_slack >= -1e-12);
    CHECK(ident.tp_residual <= 1e-12);
    CHECK(ident.ppt_slack == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ident.equality_residuals[2] == doctest::Approx(2.0).epsilon(1e-12));

    // partial dephasing stays entangling until p = 1/2
    CHECK(verify_choi_constraints(choi(dephasing(0.3))).ppt_slack == doctest::Approx(-0.4).epsilon(1e-12));
    CHECK(verify_choi_constraints(choi(dephasing(0.5))).ppt_slack >= -1e-12);

    // the optimal feedback channel is entangling at the advantage peak
    const TaskParams peak(0.115, 0.715);
    const ChoiConstraintReport qc =
        verify_choi_constraints(choi(quantum_control_channel(peak, chi_opt(peak))));
    CHECK(qc.ppt_slack < -1e-6);
    CHECK(qc.psd_slack >= -1e-12);
    CHECK(qc.tp_residual <= 1e-12);
    CHECK(qc.ppt_slack == doctest::Approx(-0.35231).epsilon(1e-4));
}

TEST_CASE("random channel sampling is deterministic and trace preserving") {
    const KrausChannel a = random_cptp_channel(42);
    const KrausChannel b = random_cptp_channel(42);
    REQUIRE(a.kraus_ops().size() == 4);
    REQUIRE(b.kraus_ops().size() == 4);
    for (size_t i = 0; i < 4; ++i) {
        CHECK(a.kraus_ops()[i].distance(b.kraus_ops()[i]) == 0.0);
    }
    const KrausChannel c = random_cptp_channel(43);
    CHECK(a.kraus_ops()[0].distance(c.kraus_ops()[0]) > 1e-3);

    // constructor has already verified trace preservation; check the Choi too
    const ChoiConstraintReport rep = verify_choi_constraints(choi(a));
    CHECK(rep.psd_slack >= -1e-12);
    CHECK(rep.tp_residual <= 1e-12);
}

TEST_CASE("random channel oracle") {
    const TaskParams task(0.115, 0.715);
    const OracleResult res = random_cptp_oracle(task, 200, 42);
    CHECK(res.best_index >= 0);
    CHECK(res.best_index < 200);
    CHECK(res.max_fidelity <= quantum_dual(task).bound + 1e-9);
    CHECK(res.max_fidelity > 0.5);

    const OracleResult again = random_cptp_oracle(task, 200, 42);
    CHECK(again.max_fidelity == res.max_fidelity);
    CHECK(again.best_index == res.best_index);

    // the best over a prefix never exceeds the best over the full run
    const OracleResult prefix = random_cptp_oracle(task, 50, 42);
    CHECK(prefix.max_fidelity <= res.max_fidelity);

    CHECK_THROWS_AS(random_cptp_oracle(task, 0, 42), std::invalid_argument);
}

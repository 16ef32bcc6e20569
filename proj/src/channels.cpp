#include "qfc/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qfc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Projectors onto the y-basis states (|0> ± i|1>)/sqrt2.
ComplexMatrix projector_plus_i() {
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = cplx(0.0, -0.5);
    m(1, 0) = cplx(0.0, 0.5);
    return m;
}

ComplexMatrix projector_minus_i() {
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = cplx(0.0, 0.5);
    m(1, 0) = cplx(0.0, -0.5);
    return m;
}

void require_chi(double chi) {
    if (!(chi >= 0.0 && chi <= kHalfPi)) {
        throw std::invalid_argument("chi must lie in [0, pi/2]");
    }
}

}  // namespace

ComplexMatrix pauli(Axis axis) {
    ComplexMatrix m(2);
    switch (axis) {
        case Axis::x:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::y:
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case Axis::z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

ComplexMatrix rotation(Axis axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    ComplexMatrix m(2);
    switch (axis) {
        case Axis::x:
            m(0, 0) = c;
            m(1, 1) = c;
            m(0, 1) = cplx(0.0, -s);
            m(1, 0) = cplx(0.0, -s);
            break;
        case Axis::y:
            m(0, 0) = c;
            m(1, 1) = c;
            m(0, 1) = -s;
            m(1, 0) = s;
            break;
        case Axis::z:
            m(0, 0) = cplx(c, -s);
            m(1, 1) = cplx(c, s);
            break;
    }
    return m;
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw std::invalid_argument("channel needs at least one Kraus operator");
    ComplexMatrix acc(2);
    for (const auto& k : ops_) {
        if (k.dim() != 2) throw std::invalid_argument("Kraus operators must be 2x2");
        acc += k.adjoint() * k;
    }
    if (acc.distance(ComplexMatrix::identity(2)) > 1e-12) {
        throw std::invalid_argument("Kraus operators are not trace preserving");
    }
}

KrausChannel KrausChannel::identity() {
    return KrausChannel({ComplexMatrix::identity(2)});
}

MeasurementPair::MeasurementPair(ComplexMatrix m0_in, ComplexMatrix m1_in)
    : m0(std::move(m0_in)), m1(std::move(m1_in)) {
    if (m0.dim() != 2 || m1.dim() != 2) throw std::invalid_argument("measurement operators must be 2x2");
    const ComplexMatrix sum = m0.adjoint() * m0 + m1.adjoint() * m1;
    if (sum.distance(ComplexMatrix::identity(2)) > 1e-12) {
        throw std::invalid_argument("measurement operators are not complete");
    }
}

KrausChannel dephasing(double p) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("p must lie in [0, 0.5]");
    ComplexMatrix k0 = ComplexMatrix::identity(2);
    k0 *= std::sqrt(1.0 - p);
    ComplexMatrix k1 = pauli(Axis::z);
    k1 *= std::sqrt(p);
    return KrausChannel({k0, k1});
}

KrausChannel preferred_ensemble(double alpha) {
    const cplx w = 1.0 / std::numbers::sqrt2;
    ComplexMatrix k0 = rotation(Axis::z, alpha);
    k0 *= w;
    ComplexMatrix k1 = rotation(Axis::z, -alpha);
    k1 *= w;
    return KrausChannel({k0, k1});
}

MeasurementPair weak_measurement(double chi) {
    require_chi(chi);
    const double c = std::cos(chi / 2.0);
    const double s = std::sin(chi / 2.0);
    // Outcome 0 weights |-i> by cos(chi/2): at chi = 0 it projects onto |-i>.
    const ComplexMatrix plus = projector_plus_i();
    const ComplexMatrix minus = projector_minus_i();
    return MeasurementPair(cplx(s, 0.0) * plus + cplx(c, 0.0) * minus,
                           cplx(c, 0.0) * plus + cplx(s, 0.0) * minus);
}

MeasurementPair circuit_induced_measurement(double chi) {
    require_chi(chi);
    // Two-qubit index is 2 * signal + meter. The meter starts in |0>, is
    // rotated by Y_chi, the signal is rotated by X_{-pi/2}, a CNOT with the
    // signal as control follows, then X_{+pi/2} undoes the basis change and
    // the meter is read in the z basis.
    ComplexMatrix cnot(4);
    cnot(0, 0) = 1.0;
    cnot(1, 1) = 1.0;
    cnot(2, 3) = 1.0;
    cnot(3, 2) = 1.0;
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix u = kron(rotation(Axis::x, kHalfPi), i2) * cnot *
                            kron(rotation(Axis::x, -kHalfPi), i2) *
                            kron(i2, rotation(Axis::y, chi));
    ComplexMatrix k0(2);
    ComplexMatrix k1(2);
    for (int a = 0; a < 2; ++a) {
        for (int j = 0; j < 2; ++j) {
            k0(a, j) = u(2 * a + 0, 2 * j + 0);
            k1(a, j) = u(2 * a + 1, 2 * j + 0);
        }
    }
    return MeasurementPair(k0, k1);
}

std::array<MeasurementOutcome, 2> measure(const DensityMatrix& rho, const MeasurementPair& pair) {
    std::array<MeasurementOutcome, 2> out;
    const ComplexMatrix* ops[2] = {&pair.m0, &pair.m1};
    for (int m = 0; m < 2; ++m) {
        const ComplexMatrix updated = (*ops[m]) * rho.matrix() * ops[m]->adjoint();
        const double prob = std::max(0.0, updated.trace().real());
        out[static_cast<size_t>(m)].probability = prob;
        if (prob >= 1e-14) {
            ComplexMatrix normalized = updated;
            normalized *= cplx(1.0 / prob, 0.0);
            out[static_cast<size_t>(m)].post_state = DensityMatrix::unchecked(normalized);
            out[static_cast<size_t>(m)].defined = true;
        }
    }
    return out;
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
    ComplexMatrix acc(2);
    for (const auto& k : channel.kraus_ops()) {
        acc += k * rho.matrix() * k.adjoint();
    }
    return DensityMatrix::unchecked(acc);
}

ChoiMatrix choi(const KrausChannel& channel) {
    ComplexMatrix u(4);
    for (const auto& k : channel.kraus_ops()) {
        for (int j = 0; j < 2; ++j) {
            for (int kk = 0; kk < 2; ++kk) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        u(2 * j + a, 2 * kk + b) += k(a, j) * std::conj(k(b, kk));
                    }
                }
            }
        }
    }
    return ChoiMatrix{u};
}

DensityMatrix apply_choi(const ChoiMatrix& upsilon, const DensityMatrix& rho) {
    ComplexMatrix out(2);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            cplx acc = 0.0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    acc += rho.matrix()(j, i) * upsilon.matrix(2 * j + a, 2 * i + b);
                }
            }
            out(a, b) = acc;
        }
    }
    return DensityMatrix::unchecked(out);
}

}  // namespace qfc

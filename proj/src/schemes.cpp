#include "qfc/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// 1 - rx^2 without the cancellation the direct form suffers near rx = 1.
double one_minus_rx_sq(const TaskParams& task) {
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    return s * s + 4.0 * task.p * (1.0 - task.p) * c * c;
}

PureState reprepared_state(int variant, double theta, int outcome) {
    if (variant == 1) {
        return prepare_input(theta, outcome == 0 ? 1 : 2);
    }
    // Hedged repreparation: biased toward |0> for outcome 0 and |1> for
    // outcome 1 by sin^2(theta)/gamma.
    const double s = std::sin(theta);
    const double gamma = std::sqrt(s * s * s * s + std::cos(theta) * std::cos(theta));
    const double bias = (outcome == 0 ? 0.5 : -0.5) * s * s / gamma;
    const double a0 = std::sqrt(std::max(0.0, 0.5 + bias));
    const double a1 = std::sqrt(std::max(0.0, 0.5 - bias));
    return PureState(cplx(a0, 0.0), cplx(a1, 0.0));
}

}  // namespace

TaskParams::TaskParams(double p_in, double theta_in) : p(p_in), theta(theta_in) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("p must lie in [0, 0.5]");
    if (!(theta >= 0.0 && theta <= kHalfPi)) throw std::invalid_argument("theta must lie in [0, pi/2]");
}

double TaskParams::rx() const {
    return (1.0 - 2.0 * p) * std::cos(theta);
}

QuantumControlParams::QuantumControlParams(double chi_in, double eta_in) : chi(chi_in), eta(eta_in) {
    if (!(chi >= 0.0 && chi <= kHalfPi)) throw std::invalid_argument("chi must lie in [0, pi/2]");
    if (!(eta >= 0.0 && eta <= kHalfPi)) throw std::invalid_argument("eta must lie in [0, pi/2]");
}

double average_fidelity(const KrausChannel& control, const TaskParams& task) {
    const KrausChannel noise = dephasing(task.p);
    double acc = 0.0;
    for (int which = 1; which <= 2; ++which) {
        const PureState psi = prepare_input(task.theta, which);
        const DensityMatrix noisy = apply(noise, DensityMatrix::from_pure(psi));
        acc += fidelity(psi, apply(control, noisy));
    }
    return 0.5 * acc;
}

double do_nothing_fidelity(const TaskParams& task) {
    const double c = std::cos(task.theta);
    return 1.0 - task.p * c * c;
}

double helstrom_probability(double theta) {
    if (!(theta >= 0.0 && theta <= kHalfPi)) throw std::invalid_argument("theta must lie in [0, pi/2]");
    return 0.5 * (1.0 + std::sin(theta));
}

KrausChannel dr_channel(int variant, double theta) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    if (!(theta >= 0.0 && theta <= kHalfPi)) throw std::invalid_argument("theta must lie in [0, pi/2]");
    // Measure in the z basis, reprepare Q_b on outcome b. Kraus operators are
    // sqrt(lambda) |q><b| over the eigenpairs of each repreparation, giving a
    // uniform four-operator channel whatever the Q_b are.
    std::vector<ComplexMatrix> ops;
    for (int outcome = 0; outcome < 2; ++outcome) {
        const PureState rep = reprepared_state(variant, theta, outcome);
        const EigenSystem sys = eig_hermitian_full(rep.projector());
        for (int k = 0; k < 2; ++k) {
            const double weight = std::sqrt(std::max(0.0, sys.values[static_cast<size_t>(k)]));
            ComplexMatrix op(2);
            for (int i = 0; i < 2; ++i) {
                op(i, outcome) = weight * sys.vectors(i, k);
            }
            ops.push_back(op);
        }
    }
    return KrausChannel(std::move(ops));
}

double dr_fidelity(int variant, double theta) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    if (!(theta >= 0.0 && theta <= kHalfPi)) throw std::invalid_argument("theta must lie in [0, pi/2]");
    const double s = std::sin(theta);
    if (variant == 1) {
        return 1.0 - 0.5 * (s * s - s * s * s);
    }
    const double c = std::cos(theta);
    return 0.5 + 0.5 * std::sqrt(c * c + s * s * s * s);
}

double eta_opt(const TaskParams& task, double chi) {
    if (!(chi >= 0.0 && chi <= kHalfPi)) throw std::invalid_argument("chi must lie in [0, pi/2]");
    if (chi == kHalfPi) return 0.0;
    const double rx = task.rx();
    if (chi == 0.0 || rx == 0.0) return kHalfPi;
    return std::atan2(std::cos(chi), rx * std::sin(chi));
}

KrausChannel quantum_control_channel(const TaskParams& task, double chi) {
    const double eta = eta_opt(task, chi);
    const MeasurementPair pair = weak_measurement(chi);
    return KrausChannel({rotation(Axis::z, eta) * pair.m0, rotation(Axis::z, -eta) * pair.m1});
}

double fqc(const TaskParams& task, double chi) {
    if (!(chi >= 0.0 && chi <= kHalfPi)) throw std::invalid_argument("chi must lie in [0, pi/2]");
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    const double sc = std::sin(chi);
    const double cc = std::cos(chi);
    const double rx = task.rx();
    // cos^2(chi) + rx^2 sin^2(chi), the cancellation-free arrangement of
    // 1 - (1 - rx^2) sin^2(chi), which loses half its digits near its zero.
    const double disc = cc * cc + rx * rx * sc * sc;
    return 0.5 * (1.0 + s * s * sc + c * std::sqrt(disc));
}

double chi_opt(const TaskParams& task) {
    if (task.p == 0.0) return kHalfPi;
    if (task.theta == 0.0) return 0.0;
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    const double w = one_minus_rx_sq(task);
    const double s4 = s * s * s * s;
    const double arg = s4 / (w * w * c * c + w * s4);
    return std::asin(std::sqrt(std::clamp(arg, 0.0, 1.0)));
}

double fqc_opt(const TaskParams& task) {
    const double w = one_minus_rx_sq(task);
    if (w == 0.0) return 1.0;  // p = 0, theta = 0: every scheme is exact
    const double s = std::sin(task.theta);
    const double c = std::cos(task.theta);
    return 0.5 + 0.5 * std::sqrt(c * c + s * s * s * s / w);
}

double f_dif(const TaskParams& task) {
    return fqc_opt(task) - std::max(dr_fidelity(2, task.theta), do_nothing_fidelity(task));
}

}  // namespace qfc

#include "qfc/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfc {

namespace {

// Closed-form extreme eigenvalues of a Hermitian 2x2 matrix; avoids the
// iterative solver in state-validation hot paths.
std::pair<double, double> eig2_hermitian(const ComplexMatrix& m) {
    const double half_tr = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, half_tr * half_tr - det));
    return {half_tr - disc, half_tr + disc};
}

}  // namespace

PureState::PureState(cplx a0, cplx a1) : amp_{a0, a1} {
    const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("pure state amplitudes must have unit norm");
    }
}

ComplexMatrix PureState::projector() const {
    ComplexMatrix m(2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = amp_[static_cast<size_t>(i)] * std::conj(amp_[static_cast<size_t>(j)]);
        }
    }
    return m;
}

BlochVector PureState::bloch() const {
    return DensityMatrix::from_pure(*this).bloch();
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
    if (m.dim() != 2) throw std::invalid_argument("density matrix must be 2x2");
    if (!m.is_hermitian(1e-12)) throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(m.trace() - cplx(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
    if (eig2_hermitian(m).first < -1e-10) {
        throw std::invalid_argument("density matrix must be positive semidefinite");
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::unchecked(const ComplexMatrix& m) {
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed() {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m *= cplx(0.5, 0.0);
    return DensityMatrix(m);
}

BlochVector DensityMatrix::bloch() const {
    // rho = (I + rx X + ry Y + rz Z) / 2, so rho01 = (rx - i ry) / 2.
    BlochVector r;
    r.rx = 2.0 * m_(0, 1).real();
    r.ry = -2.0 * m_(0, 1).imag();
    r.rz = (m_(0, 0) - m_(1, 1)).real();
    return r;
}

DensityMatrix density_from_bloch(const BlochVector& r) {
    const double norm = std::sqrt(r.rx * r.rx + r.ry * r.ry + r.rz * r.rz);
    if (norm > 1.0 + 1e-10) throw std::invalid_argument("Bloch vector norm exceeds 1");
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + r.rz);
    m(1, 1) = 0.5 * (1.0 - r.rz);
    m(0, 1) = 0.5 * cplx(r.rx, -r.ry);
    m(1, 0) = 0.5 * cplx(r.rx, r.ry);
    return DensityMatrix::unchecked(m);
}

PureState prepare_input(double theta, int which) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
        throw std::invalid_argument("theta must lie in [0, pi/2]");
    }
    if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
    const double c = std::cos(theta / 2.0);
    const double s = (which == 1) ? std::sin(theta / 2.0) : -std::sin(theta / 2.0);
    // cos(theta/2)|+> ± sin(theta/2)|-> written in the z basis.
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    return PureState(cplx((c + s) * inv_sqrt2, 0.0), cplx((c - s) * inv_sqrt2, 0.0));
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
    cplx acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            acc += std::conj(psi.amplitude(i)) * rho.matrix()(i, j) * psi.amplitude(j);
        }
    }
    return std::clamp(acc.real(), 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    const ComplexMatrix delta = rho1.matrix() - rho2.matrix();
    const auto [lo, hi] = eig2_hermitian(delta);
    return 0.5 * (std::abs(lo) + std::abs(hi));
}

}  // namespace qfc

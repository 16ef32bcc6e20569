#pragma once

#include <array>

#include "qfc/linalg.hpp"

namespace qfc {

struct BlochVector {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;
};

// Global phase is not normalized away; state equality is tested through
// fidelity, not amplitude comparison.
class PureState {
public:
    PureState(cplx a0, cplx a1);

    cplx amplitude(int i) const { return amp_[static_cast<size_t>(i)]; }
    ComplexMatrix projector() const;
    BlochVector bloch() const;

private:
    std::array<cplx, 2> amp_;
};

class DensityMatrix {
public:
    // Validates Hermiticity (1e-12), unit trace (1e-12), positivity (-1e-10).
    static DensityMatrix from_matrix(const ComplexMatrix& m);
    // For outputs of operations that preserve validity by construction.
    static DensityMatrix unchecked(const ComplexMatrix& m);
    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed();

    const ComplexMatrix& matrix() const { return m_; }
    BlochVector bloch() const;

private:
    explicit DensityMatrix(const ComplexMatrix& m) : m_(m) {}
    ComplexMatrix m_;
};

DensityMatrix density_from_bloch(const BlochVector& r);

// The two task inputs, cos(theta/2)|+> ± sin(theta/2)|->, which = 1 or 2.
// Overlap <psi1|psi2> = cos(theta); both Bloch vectors lie in the xz plane.
PureState prepare_input(double theta, int which);

double fidelity(const PureState& psi, const DensityMatrix& rho);
double trace_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

}  // namespace qfc

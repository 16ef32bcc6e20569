#pragma once

#include <array>
#include <vector>

#include "qfc/linalg.hpp"
#include "qfc/qstate.hpp"

namespace qfc {

enum class Axis { x, y, z };

// e^{-i * angle * P / 2} for Pauli P on the chosen axis.
ComplexMatrix rotation(Axis axis, double angle);

ComplexMatrix pauli(Axis axis);

class KrausChannel {
public:
    // Validates trace preservation: sum K†K = I within 1e-12.
    explicit KrausChannel(std::vector<ComplexMatrix> ops);
    static KrausChannel identity();

    const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }

private:
    std::vector<ComplexMatrix> ops_;
};

struct MeasurementPair {
    // Validates completeness: M0†M0 + M1†M1 = I within 1e-12.
    MeasurementPair(ComplexMatrix m0_in, ComplexMatrix m1_in);
    ComplexMatrix m0;
    ComplexMatrix m1;
};

// 4x4, ordering (in ⊗ out), unnormalized: Tr = 2 for trace-preserving maps.
struct ChoiMatrix {
    ComplexMatrix matrix;
};

// Phase flip with probability p, Kraus {sqrt(1-p) I, sqrt(p) Z}. 0 <= p <= 0.5.
KrausChannel dephasing(double p);

// Same channel as dephasing(sin^2(alpha/2)) written as random ±alpha
// z rotations, Kraus {Z_alpha/sqrt2, Z_-alpha/sqrt2}.
KrausChannel preferred_ensemble(double alpha);

// Two-outcome measurement of strength chi in [0, pi/2], diagonal in the
// {|+i>, |-i>} basis. chi = 0 is projective (outcome 0 projects onto |-i>),
// chi = pi/2 is no measurement (both operators I/sqrt2).
MeasurementPair weak_measurement(double chi);

// Same measurement induced on the signal qubit by the meter circuit: meter
// prepared in |0>, rotated by Y_chi, entangled with the signal, then read in
// the {|0>,|1>} basis. Equals weak_measurement(chi) up to a per-operator
// global phase.
MeasurementPair circuit_induced_measurement(double chi);

struct MeasurementOutcome {
    double probability = 0.0;
    // False when probability < 1e-14; post_state is meaningless then.
    bool defined = false;
    DensityMatrix post_state = DensityMatrix::maximally_mixed();
};
std::array<MeasurementOutcome, 2> measure(const DensityMatrix& rho, const MeasurementPair& pair);

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);
ChoiMatrix choi(const KrausChannel& channel);

// Channel action recovered from the Choi matrix: Tr_in[(rho^T ⊗ I) Y].
DensityMatrix apply_choi(const ChoiMatrix& upsilon, const DensityMatrix& rho);

}  // namespace qfc

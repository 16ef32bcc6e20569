#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qfc {

using cplx = std::complex<double>;

// Dense complex matrix of dimension 2 or 4, row major. All bipartite 4x4
// operators in this library use the tensor ordering (in ⊗ out): row index
// 2*i_in + i_out.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    double max_abs() const;
    double distance(const ComplexMatrix& other) const;
    bool is_hermitian(double tol = 1e-12) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    int dim_;
    std::array<cplx, 16> a_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues ascending. Input must be Hermitian within 1e-12; a violating
// entry pair is named in the thrown diagnostic.
std::vector<double> eig_hermitian(const ComplexMatrix& h);

// Full spectral decomposition, eigenvalues ascending, eigenvectors as the
// columns of `vectors` in matching order.
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};
EigenSystem eig_hermitian_full(const ComplexMatrix& h);

struct PsdReport {
    bool psd;
    double min_eigenvalue;
};
PsdReport is_psd(const ComplexMatrix& h, double tol);

enum class Subsystem { in, out };

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem over);
ComplexMatrix partial_transpose_out(const ComplexMatrix& m);

}  // namespace qfc

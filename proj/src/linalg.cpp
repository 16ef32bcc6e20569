#include "qfc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfc {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("ComplexMatrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void require_hermitian(const ComplexMatrix& h, double tol = 1e-12) {
    const int n = h.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double dev = std::abs(h(i, j) - std::conj(h(j, i)));
            if (dev > tol) {
                std::ostringstream msg;
                msg << "matrix is not Hermitian: entries (" << i << "," << j << ") and (" << j
                    << "," << i << ") differ from conjugates by " << dev;
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

// Cyclic Jacobi on a real symmetric n x n matrix, n <= 8. Iterates until the
// off-diagonal Frobenius norm is <= 1e-13. Eigenvectors accumulate in v.
void jacobi_real_symmetric(int n, double* s, double* v) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            v[i * n + j] = (i == j) ? 1.0 : 0.0;
        }
    }
    auto off_norm = [&]() {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) acc += s[i * n + j] * s[i * n + j];
            }
        }
        return std::sqrt(acc);
    };
    for (int sweep = 0; sweep < 200 && off_norm() > 1e-13; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = s[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (s[q * n + q] - s[p * n + p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s[k * n + p];
                    const double skq = s[k * n + q];
                    s[k * n + p] = c * skp - sn * skq;
                    s[k * n + q] = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s[p * n + k];
                    const double sqk = s[q * n + k];
                    s[p * n + k] = c * spk - sn * sqk;
                    s[q * n + k] = sn * spk + c * sqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - sn * vkq;
                    v[k * n + q] = sn * vkp + c * vkq;
                }
            }
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require_dim(dim);
    a_.fill(cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            r(i, j) = std::conj((*this)(j, i));
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            r(i, j) = (*this)(j, i);
        }
    }
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            m = std::max(m, std::abs((*this)(i, j)));
        }
    }
    return m;
}

double ComplexMatrix::distance(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            m = std::max(m, std::abs((*this)(i, j) - other(i, j)));
        }
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
    }
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
    ComplexMatrix r(lhs.dim_);
    for (int i = 0; i < lhs.dim_; ++i) {
        for (int k = 0; k < lhs.dim_; ++k) {
            const cplx lik = lhs(i, k);
            if (lik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < lhs.dim_; ++j) {
                r(i, j) += lik * rhs(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron expects two 2x2 matrices");
    ComplexMatrix r(4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

EigenSystem eig_hermitian_full(const ComplexMatrix& h) {
    require_hermitian(h);
    const int d = h.dim();
    const int n = 2 * d;

    // Embed H = X + iY into the real symmetric [[X, -Y], [Y, X]]; its spectrum
    // is that of H with every eigenvalue doubled.
    double s[64] = {0.0};
    double v[64] = {0.0};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            s[i * n + j] = re;
            s[(i + d) * n + (j + d)] = re;
            s[i * n + (j + d)] = -im;
            s[(i + d) * n + j] = im;
        }
    }
    jacobi_real_symmetric(n, s, v);

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s[a * n + a] < s[b * n + b]; });

    // Each eigenvalue appears twice; the paired real eigenvectors map to
    // complex vectors differing only by a factor of i. Walk the columns in
    // ascending order and keep the ones that are independent over C.
    EigenSystem sys{std::vector<double>(), ComplexMatrix(d)};
    std::vector<std::vector<cplx>> accepted;
    for (int idx : order) {
        if (static_cast<int>(accepted.size()) == d) break;
        std::vector<cplx> z(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            z[static_cast<size_t>(i)] = cplx(v[i * n + idx], v[(i + d) * n + idx]);
        }
        for (const auto& u : accepted) {
            cplx overlap = 0.0;
            for (int i = 0; i < d; ++i) overlap += std::conj(u[static_cast<size_t>(i)]) * z[static_cast<size_t>(i)];
            for (int i = 0; i < d; ++i) z[static_cast<size_t>(i)] -= overlap * u[static_cast<size_t>(i)];
        }
        double norm = 0.0;
        for (int i = 0; i < d; ++i) norm += std::norm(z[static_cast<size_t>(i)]);
        norm = std::sqrt(norm);
        if (norm < 0.5) continue;
        for (int i = 0; i < d; ++i) z[static_cast<size_t>(i)] /= norm;
        const int col = static_cast<int>(accepted.size());
        for (int i = 0; i < d; ++i) sys.vectors(i, col) = z[static_cast<size_t>(i)];
        sys.values.push_back(s[idx * n + idx]);
        accepted.push_back(std::move(z));
    }
    if (static_cast<int>(accepted.size()) != d) {
        throw std::logic_error("eigenvector extraction failed to span the space");
    }

    ComplexMatrix rec(d);
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                rec(i, j) += sys.values[static_cast<size_t>(k)] * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
            }
        }
    }
    if (rec.distance(h) > 1e-10) {
        throw std::logic_error("spectral reconstruction residual exceeds 1e-10");
    }
    return sys;
}

std::vector<double> eig_hermitian(const ComplexMatrix& h) {
    return eig_hermitian_full(h).values;
}

PsdReport is_psd(const ComplexMatrix& h, double tol) {
    const auto values = eig_hermitian(h);
    const double min_eig = values.front();
    return PsdReport{min_eig >= -tol, min_eig};
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem over) {
    if (m.dim() != 4) throw std::invalid_argument("partial_trace expects a 4x4 matrix");
    ComplexMatrix r(2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < 2; ++k) {
                if (over == Subsystem::out) {
                    acc += m(2 * i + k, 2 * j + k);
                } else {
                    acc += m(2 * k + i, 2 * k + j);
                }
            }
            r(i, j) = acc;
        }
    }
    return r;
}

ComplexMatrix partial_transpose_out(const ComplexMatrix& m) {
    if (m.dim() != 4) throw std::invalid_argument("partial_transpose_out expects a 4x4 matrix");
    ComplexMatrix r(4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    r(2 * i + a, 2 * j + b) = m(2 * i + b, 2 * j + a);
                }
            }
        }
    }
    return r;
}

}  // namespace qfc

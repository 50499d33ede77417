// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "adclab/errors.hpp"

namespace adclab {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. The workhorse value type for
/// states, unitaries and POVM elements. Dimensions in this project stay
/// at or below 256 (eight qubits), so everything is plain O(d^2)/O(d^3)
/// dense arithmetic.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    std::span<const cplx> entries() const { return a_; }
    std::span<cplx> entries() { return a_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int dim_ = 0;
    std::vector<cplx> a_;
};

/// Normalized state vector. Construction through `normalized` guarantees
/// unit norm to 1e-12.
class Ket {
public:
    Ket() = default;

    static Ket normalized(std::vector<cplx> amplitudes);
    static Ket basis(int dim, int index);

    int dim() const { return static_cast<int>(amp_.size()); }
    const cplx& operator[](int i) const { return amp_[static_cast<size_t>(i)]; }

    std::span<const cplx> amplitudes() const { return amp_; }

    /// |k><k| as a matrix.
    ComplexMatrix projector() const;

private:
    std::vector<cplx> amp_;
};

cplx inner(const Ket& a, const Ket& b);

/// |<a|b>|^2; >= 1 - 1e-10 is the project-wide notion of "equal up to
/// global phase".
double fidelity(const Ket& a, const Ket& b);

Ket apply(const ComplexMatrix& m, const Ket& k);

/// Kronecker product, big-endian index order: (a (x) b) maps the pair
/// (i, j) to index i*b.dim + j.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor(const Ket& a, const Ket& b);

/// max |m - m†| over entries.
double hermiticity_error(const ComplexMatrix& m);

/// max |u†u - I| over entries.
double unitarity_error(const ComplexMatrix& u);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermEig {
    std::vector<double> eigenvalues;  // sorted descending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Full Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Throws NotHermitianError when ‖h - h†‖_max exceeds tol.
HermEig herm_eig(const ComplexMatrix& h, double tol = 1e-9);

/// Eigenvalues only, sorted descending. Dispatches to a real symmetric
/// tridiagonal QL solve for larger real-valued inputs; the Jacobi sweep
/// handles everything else.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol = 1e-9);

/// Σ|λ_i| of a Hermitian matrix (all uses here are Hermitian differences).
double trace_norm(const ComplexMatrix& a, double tol = 1e-9);

/// min eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& h, double tol = 1e-9);

/// (g + eps)^(-1/2) through the eigendecomposition; g must be Hermitian PSD
/// up to the regularization.
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& g, double eps = 0.0);

}  // namespace adclab

// SPDX-License-Identifier: Apache-2.0

#include "adclab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adclab {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw OutOfRangeError("matrix dimension must be positive");
    a_.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int d = static_cast<int>(rows.size());
    ComplexMatrix m(d);
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d)
            throw DimensionMismatchError("from_rows: ragged row");
        int c = 0;
        for (const cplx& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (dim_ != o.dim_) throw DimensionMismatchError("matrix add: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (dim_ != o.dim_) throw DimensionMismatchError("matrix sub: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatchError("matrix mul: dimension mismatch");
    const int d = a.dim_;
    ComplexMatrix out(d);
    for (int r = 0; r < d; ++r) {
        for (int k = 0; k < d; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{0.0, 0.0}) continue;
            const cplx* brow = &b.a_[static_cast<size_t>(k) * d];
            cplx* orow = &out.a_[static_cast<size_t>(r) * d];
            for (int c = 0; c < d; ++c) orow[c] += ark * brow[c];
        }
    }
    return out;
}

Ket Ket::normalized(std::vector<cplx> amplitudes) {
    if (amplitudes.empty()) throw OutOfRangeError("ket must have positive dimension");
    double n2 = 0.0;
    for (const cplx& v : amplitudes) n2 += std::norm(v);
    if (n2 <= 0.0 || !std::isfinite(n2))
        throw OutOfRangeError("ket cannot be normalized: zero or non-finite norm");
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& v : amplitudes) v *= inv;
    Ket k;
    k.amp_ = std::move(amplitudes);
    return k;
}

Ket Ket::basis(int dim, int index) {
    if (dim <= 0 || index < 0 || index >= dim) throw BadIndexError("basis ket index out of range");
    std::vector<cplx> a(static_cast<size_t>(dim), cplx{0.0, 0.0});
    a[static_cast<size_t>(index)] = 1.0;
    return normalized(std::move(a));
}

ComplexMatrix Ket::projector() const {
    const int d = dim();
    ComplexMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = amp_[static_cast<size_t>(r)] * std::conj(amp_[static_cast<size_t>(c)]);
    return m;
}

cplx inner(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("inner: dimension mismatch");
    cplx s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double fidelity(const Ket& a, const Ket& b) { return std::norm(inner(a, b)); }

Ket apply(const ComplexMatrix& m, const Ket& k) {
    if (m.dim() != k.dim()) throw DimensionMismatchError("apply: dimension mismatch");
    std::vector<cplx> out(static_cast<size_t>(m.dim()), cplx{0.0, 0.0});
    for (int r = 0; r < m.dim(); ++r) {
        cplx s = 0.0;
        for (int c = 0; c < m.dim(); ++c) s += m(r, c) * k[c];
        out[static_cast<size_t>(r)] = s;
    }
    return Ket::normalized(std::move(out));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int ra = 0; ra < da; ++ra)
        for (int ca = 0; ca < da; ++ca) {
            const cplx v = a(ra, ca);
            if (v == cplx{0.0, 0.0}) continue;
            for (int rb = 0; rb < db; ++rb)
                for (int cb = 0; cb < db; ++cb)
                    out(ra * db + rb, ca * db + cb) = v * b(rb, cb);
        }
    return out;
}

Ket tensor(const Ket& a, const Ket& b) {
    std::vector<cplx> out(static_cast<size_t>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) out[static_cast<size_t>(i) * b.dim() + j] = a[i] * b[j];
    return Ket::normalized(std::move(out));
}

double hermiticity_error(const ComplexMatrix& m) {
    double e = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = r; c < m.dim(); ++c) e = std::max(e, std::abs(m(r, c) - std::conj(m(c, r))));
    return e;
}

double unitarity_error(const ComplexMatrix& u) {
    const int d = u.dim();
    double e = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            cplx s = 0.0;
            for (int k = 0; k < d; ++k) s += std::conj(u(k, r)) * u(k, c);
            if (r == c) s -= 1.0;
            e = std::max(e, std::abs(s));
        }
    return e;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("max_abs_diff: dimension mismatch");
    double e = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) e = std::max(e, std::abs(a(r, c) - b(r, c)));
    return e;
}

namespace {

// One cyclic Jacobi pass annihilates every off-diagonal pair (p, q). The
// complex element is phased to a real one first, then the classic
// symmetric Jacobi angle applies. Quadratic convergence sets in after a
// few sweeps; the iteration is stopped on a relative off-diagonal
// threshold so that trace_norm stays absolutely homogeneous.
void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* q, std::vector<double>& eigs) {
    const int d = a.dim();
    // enforce exact Hermiticity of the working copy
    for (int r = 0; r < d; ++r) {
        a(r, r) = cplx{a(r, r).real(), 0.0};
        for (int c = r + 1; c < d; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    if (q) *q = ComplexMatrix::identity(d);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double stop = scale * 1e-15 * d;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < d; ++p)
            for (int cr = p + 1; cr < d; ++cr) off = std::max(off, std::abs(a(p, cr)));
        if (off <= stop) break;

        for (int p = 0; p < d - 1; ++p) {
            for (int r = p + 1; r < d; ++r) {
                const cplx apr = a(p, r);
                const double h = std::abs(apr);
                if (h <= stop * 1e-2) continue;
                const cplx u = apr / h;  // phase of the pivot
                const double app = a(p, p).real();
                const double arr = a(r, r).real();
                const double zeta = (arr - app) / (2.0 * h);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J(p,p)=u*c, J(p,r)=u*s, J(r,p)=-s, J(r,r)=c ;  A <- J† A J
                const cplx jp = u * c;
                const cplx jq = u * s;
                for (int k = 0; k < d; ++k) {
                    const cplx akp = a(k, p), akr = a(k, r);
                    a(k, p) = akp * jp - akr * s;
                    a(k, r) = akp * jq + akr * c;
                }
                for (int k = 0; k < d; ++k) {
                    const cplx apk = a(p, k), ark = a(r, k);
                    a(p, k) = std::conj(jp) * apk - s * ark;
                    a(r, k) = std::conj(jq) * apk + c * ark;
                }
                if (q) {
                    for (int k = 0; k < d; ++k) {
                        const cplx qkp = (*q)(k, p), qkr = (*q)(k, r);
                        (*q)(k, p) = qkp * jp - qkr * s;
                        (*q)(k, r) = qkp * jq + qkr * c;
                    }
                }
                a(p, r) = 0.0;
                a(r, p) = 0.0;
            }
        }
    }

    eigs.resize(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) eigs[static_cast<size_t>(i)] = a(i, i).real();
}

// Householder reduction of a real symmetric matrix to tridiagonal form
// (diagonal d, subdiagonal e), eigenvalues only. Followed by implicit-shift
// QL. This is the fast route trace_norm takes for the 256-dimensional real
// differences that dominate the eight-qubit sweeps.
void real_sym_tridiag(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
    d.assign(static_cast<size_t>(n), 0.0);
    e.assign(static_cast<size_t>(n), 0.0);
    auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double sc = 0.0;
            for (int k = 0; k <= l; ++k) sc += std::abs(at(i, k));
            if (sc == 0.0) {
                e[static_cast<size_t>(i)] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= sc;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
                e[static_cast<size_t>(i)] = sc * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[static_cast<size_t>(j)] = g / h;
                    f += e[static_cast<size_t>(j)] * at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    g = e[static_cast<size_t>(j)] - hh * f;
                    e[static_cast<size_t>(j)] = g;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[static_cast<size_t>(k)] + g * at(i, k);
                }
            }
        } else {
            e[static_cast<size_t>(i)] = at(i, l);
        }
        d[static_cast<size_t>(i)] = h;
    }
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = at(i, i);
}

void tridiag_ql(std::vector<double>& d, std::vector<double>& e, int n) {
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n - 1)] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<size_t>(m)]) + std::abs(d[static_cast<size_t>(m + 1)]);
                if (std::abs(e[static_cast<size_t>(m)]) <= 1e-300 + 1e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 50) break;  // eigenvalue precision is already at machine level
                double g = (d[static_cast<size_t>(l + 1)] - d[static_cast<size_t>(l)]) / (2.0 * e[static_cast<size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
                    e[static_cast<size_t>(l)] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[static_cast<size_t>(i)];
                    const double b = c * e[static_cast<size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        d[static_cast<size_t>(i + 1)] -= p;
                        e[static_cast<size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<size_t>(i + 1)] - p;
                    r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<size_t>(i + 1)] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<size_t>(l)] -= p;
                e[static_cast<size_t>(l)] = g;
                e[static_cast<size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

bool is_effectively_real(const ComplexMatrix& m, double scale) {
    for (const cplx& v : m.entries())
        if (std::abs(v.imag()) > scale * 1e-13) return false;
    return true;
}

std::vector<double> real_sym_eigenvalues(const ComplexMatrix& h) {
    const int n = h.dim();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            // symmetrize from the real parts
            a[static_cast<size_t>(r) * n + c] = 0.5 * (h(r, c).real() + h(c, r).real());
        }
    std::vector<double> d, e;
    real_sym_tridiag(a, n, d, e);
    tridiag_ql(d, e, n);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

}  // namespace

HermEig herm_eig(const ComplexMatrix& h, double tol) {
    if (hermiticity_error(h) > tol) throw NotHermitianError("herm_eig: input is not Hermitian within tolerance");
    ComplexMatrix a = h;
    ComplexMatrix q;
    std::vector<double> eigs;
    jacobi_hermitian(a, &q, eigs);

    const int d = h.dim();
    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return eigs[static_cast<size_t>(x)] > eigs[static_cast<size_t>(y)]; });

    HermEig out;
    out.eigenvalues.resize(static_cast<size_t>(d));
    out.eigenvectors = ComplexMatrix(d);
    for (int k = 0; k < d; ++k) {
        out.eigenvalues[static_cast<size_t>(k)] = eigs[static_cast<size_t>(order[static_cast<size_t>(k)])];
        for (int r = 0; r < d; ++r) out.eigenvectors(r, k) = q(r, order[static_cast<size_t>(k)]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
    if (hermiticity_error(h) > tol)
        throw NotHermitianError("hermitian_eigenvalues: input is not Hermitian within tolerance");
    const double scale = std::max(h.max_abs(), 1e-300);
    if (h.dim() > 32 && is_effectively_real(h, scale)) return real_sym_eigenvalues(h);
    ComplexMatrix a = h;
    std::vector<double> eigs;
    jacobi_hermitian(a, nullptr, eigs);
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

double trace_norm(const ComplexMatrix& a, double tol) {
    if (hermiticity_error(a) > tol) throw NotHermitianError("trace_norm: input is not Hermitian within tolerance");
    double s = 0.0;
    for (double l : hermitian_eigenvalues(a, tol)) s += std::abs(l);
    return s;
}

bool is_psd(const ComplexMatrix& h, double tol) {
    if (hermiticity_error(h) > tol) throw NotHermitianError("is_psd: input is not Hermitian within tolerance");
    const auto eigs = hermitian_eigenvalues(h, tol);
    return eigs.empty() || eigs.back() >= -tol;
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& g, double eps) {
    const auto eig = herm_eig(g, 1e-8);
    const int d = g.dim();
    ComplexMatrix out(d);
    for (int k = 0; k < d; ++k) {
        const double lam = std::max(eig.eigenvalues[static_cast<size_t>(k)], 0.0) + eps;
        const double w = 1.0 / std::sqrt(lam);
        for (int r = 0; r < d; ++r) {
            const cplx qr = eig.eigenvectors(r, k) * w;
            for (int c = 0; c < d; ++c) out(r, c) += qr * std::conj(eig.eigenvectors(c, k));
        }
    }
    return out;
}

}  // namespace adclab

// SPDX-License-Identifier: Apache-2.0

#include "adclab/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adclab {

namespace {

constexpr double kStructuralTol = 1e-9;

void check_priors(const std::vector<double>& priors, size_t count) {
    if (priors.size() != count) throw BadPriorsError("priors count does not match state count");
    double sum = 0.0;
    for (double p : priors) {
        if (!(p >= 0.0)) throw BadPriorsError("priors must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw BadPriorsError("priors must sum to 1");
}

void check_same_dim(const std::vector<DensityMatrix>& states) {
    for (const auto& s : states)
        if (s.dim() != states.front().dim()) throw DimensionMismatchError("states share no common dimension");
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int d = a.dim();
    double t = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) t += (a(r, c) * b(c, r)).real();
    return t;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return out;
}

// Y = 1/2 Σ (R_i M_i + M_i R_i); Hermitian by construction.
ComplexMatrix ykl_operator(const std::vector<ComplexMatrix>& weighted, const std::vector<ComplexMatrix>& elements) {
    ComplexMatrix y(weighted.front().dim());
    for (size_t i = 0; i < weighted.size(); ++i) y += weighted[i] * elements[i];
    return hermitize(y);
}

double gap_of(const ComplexMatrix& y, const std::vector<ComplexMatrix>& weighted) {
    double gap = 0.0;
    for (const auto& r : weighted) {
        const auto eigs = hermitian_eigenvalues(y - r, 1e-7);
        gap = std::max(gap, -eigs.back());
    }
    return gap;
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements, std::vector<int> outcome_labels)
    : elements_(std::move(elements)), outcome_labels_(std::move(outcome_labels)) {
    if (elements_.empty()) throw OutOfRangeError("POVM needs at least one element");
    const int d = elements_.front().dim();
    ComplexMatrix sum(d);
    for (const auto& e : elements_) {
        if (e.dim() != d) throw DimensionMismatchError("POVM element dimension mismatch");
        if (hermiticity_error(e) > kStructuralTol) throw NotHermitianError("POVM element is not Hermitian");
        if (!is_psd(e, kStructuralTol)) throw OutOfRangeError("POVM element is not PSD");
        sum += e;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(d)) > kStructuralTol)
        throw OutOfRangeError("POVM elements do not sum to identity");
    if (outcome_labels_.empty()) {
        outcome_labels_.resize(elements_.size());
        std::iota(outcome_labels_.begin(), outcome_labels_.end(), 0);
    } else if (outcome_labels_.size() != elements_.size()) {
        throw LengthMismatchError("POVM outcome label count mismatch");
    }
}

double povm_success(const Povm& povm, const std::vector<DensityMatrix>& states, const std::vector<double>& priors) {
    if (static_cast<size_t>(povm.size()) != states.size())
        throw DimensionMismatchError("povm_success: one element per state required");
    check_same_dim(states);
    if (povm.dim() != states.front().dim()) throw DimensionMismatchError("povm_success: dimension mismatch");
    check_priors(priors, states.size());

    double p = 0.0;
    for (size_t i = 0; i < states.size(); ++i)
        p += priors[i] * real_trace_product(states[i].matrix(), povm.element(static_cast<int>(i)));
    if (p < 0.0 && p > -1e-10) p = 0.0;
    if (p > 1.0 && p < 1.0 + 1e-10) p = 1.0;
    return p;
}

DiscriminationResult helstrom(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
    if (rho_a.dim() != rho_b.dim()) throw DimensionMismatchError("helstrom: dimension mismatch");
    const int d = rho_a.dim();
    const ComplexMatrix delta = rho_a.matrix() - rho_b.matrix();
    const auto eig = herm_eig(delta, kStructuralTol);

    double tn = 0.0;
    for (double l : eig.eigenvalues) tn += std::abs(l);

    // outcome a: strictly positive eigenspace (ties at zero go to b)
    ComplexMatrix m_a(d);
    for (int k = 0; k < d; ++k) {
        if (eig.eigenvalues[static_cast<size_t>(k)] <= 1e-12) continue;
        for (int r = 0; r < d; ++r) {
            const cplx qr = eig.eigenvectors(r, k);
            for (int c = 0; c < d; ++c) m_a(r, c) += qr * std::conj(eig.eigenvectors(c, k));
        }
    }
    ComplexMatrix m_b = ComplexMatrix::identity(d) - m_a;

    DiscriminationResult res;
    res.success_probability = 0.5 + 0.25 * tn;
    res.povm = Povm({hermitize(m_a), hermitize(m_b)});
    res.iterations = 0;
    res.converged = true;

    const std::vector<ComplexMatrix> weighted = {0.5 * rho_a.matrix(), 0.5 * rho_b.matrix()};
    res.dual_gap = gap_of(ykl_operator(weighted, res.povm.elements()), weighted);
    return res;
}

DiscriminationResult optimal_multi(const std::vector<DensityMatrix>& states, const std::vector<double>& priors,
                                   double tol, int max_iter) {
    if (states.size() < 2) throw OutOfRangeError("optimal_multi: need at least two states");
    check_same_dim(states);
    check_priors(priors, states.size());

    const int d = states.front().dim();
    const int n = static_cast<int>(states.size());
    const double reg = 1e-12;

    std::vector<ComplexMatrix> weighted;
    weighted.reserve(states.size());
    for (size_t i = 0; i < states.size(); ++i) weighted.push_back(priors[i] * states[i].matrix());

    std::vector<ComplexMatrix> m(static_cast<size_t>(n), ComplexMatrix::identity(d) * cplx{1.0 / n, 0.0});
    std::vector<ComplexMatrix> best = m;
    double best_gap = std::numeric_limits<double>::infinity();
    int iterations = 0;

    for (int it = 0; it <= max_iter; ++it) {
        iterations = it;
        const ComplexMatrix y = ykl_operator(weighted, m);
        const double gap = gap_of(y, weighted);
        if (gap < best_gap) {
            best_gap = gap;
            best = m;
        }
        if (gap <= tol) break;
        if (it == max_iter) break;

        // G = Σ R_j M_j R_j, regularized inverse square root
        ComplexMatrix g(d);
        std::vector<ComplexMatrix> rmr(static_cast<size_t>(n), ComplexMatrix(d));
        for (int i = 0; i < n; ++i) {
            rmr[static_cast<size_t>(i)] =
                weighted[static_cast<size_t>(i)] * m[static_cast<size_t>(i)] * weighted[static_cast<size_t>(i)];
            g += rmr[static_cast<size_t>(i)];
        }
        g = hermitize(g);
        const ComplexMatrix s = inv_sqrt_psd(g, reg);

        // The regularized inverse square root loses a factor eps/(lambda+eps)
        // along soft directions of G, which would otherwise floor the
        // achievable gap near eps/lambda_min. Renormalizing the update sum
        // back to the identity removes that bias exactly wherever the sum is
        // invertible; only the genuinely singular residual (all states
        // supported on a subspace, e.g. full damping) is split uniformly,
        // where it cannot affect optimality.
        ComplexMatrix total(d);
        std::vector<ComplexMatrix> raw(static_cast<size_t>(n), ComplexMatrix(d));
        for (int i = 0; i < n; ++i) {
            raw[static_cast<size_t>(i)] = hermitize(s * rmr[static_cast<size_t>(i)] * s);
            total += raw[static_cast<size_t>(i)];
        }
        total = hermitize(total);
        const auto total_eigs = hermitian_eigenvalues(total, 1e-7);
        if (total_eigs.back() > 0.5) {
            // Well-conditioned sum: renormalize it back to the identity,
            // which cancels the eps/(lambda+eps) shortfall of the regularized
            // inverse square root (that shortfall otherwise floors the
            // reachable gap near eps/lambda_min(G)). Rounding noise amplified
            // through soft directions of G is clipped at the PSD cone every
            // pass, else it feeds back and grows.
            const ComplexMatrix w = inv_sqrt_psd(total, 0.0);
            for (int i = 0; i < n; ++i) {
                const ComplexMatrix cand = hermitize(w * raw[static_cast<size_t>(i)] * w);
                const auto eig = herm_eig(cand, 1e-6);
                ComplexMatrix clipped(d);
                for (int k = 0; k < d; ++k) {
                    const double lam = eig.eigenvalues[static_cast<size_t>(k)];
                    if (lam <= 0.0) continue;
                    for (int r = 0; r < d; ++r) {
                        const cplx qr = lam * eig.eigenvectors(r, k);
                        for (int c = 0; c < d; ++c) clipped(r, c) += qr * std::conj(eig.eigenvectors(c, k));
                    }
                }
                m[static_cast<size_t>(i)] = std::move(clipped);
            }
            ComplexMatrix clipped_sum(d);
            for (int i = 0; i < n; ++i) clipped_sum += m[static_cast<size_t>(i)];
            const ComplexMatrix w2 = inv_sqrt_psd(hermitize(clipped_sum), 0.0);
            for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = hermitize(w2 * m[static_cast<size_t>(i)] * w2);
        } else {
            // singular sum (all states supported on a common subspace, e.g.
            // full damping): split the missing projector uniformly, where it
            // cannot affect optimality
            for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = raw[static_cast<size_t>(i)];
        }
        ComplexMatrix renormed_sum(d);
        for (int i = 0; i < n; ++i) renormed_sum += m[static_cast<size_t>(i)];
        const ComplexMatrix remainder = ComplexMatrix::identity(d) - renormed_sum;
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] += remainder * cplx{1.0 / n, 0.0};
    }

    DiscriminationResult res;
    res.povm = Povm(best);
    res.dual_gap = best_gap;
    res.iterations = iterations;
    res.converged = best_gap <= tol;
    res.success_probability = ykl_operator(weighted, best).trace().real();
    return res;
}

double ykl_gap(const Povm& povm, const std::vector<DensityMatrix>& states, const std::vector<double>& priors) {
    if (static_cast<size_t>(povm.size()) != states.size())
        throw DimensionMismatchError("ykl_gap: one element per state required");
    check_same_dim(states);
    if (povm.dim() != states.front().dim()) throw DimensionMismatchError("ykl_gap: dimension mismatch");
    check_priors(priors, states.size());

    std::vector<ComplexMatrix> weighted;
    weighted.reserve(states.size());
    for (size_t i = 0; i < states.size(); ++i) weighted.push_back(priors[i] * states[i].matrix());
    return gap_of(ykl_operator(weighted, povm.elements()), weighted);
}

}  // namespace adclab

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "adclab/channels.hpp"
#include "adclab/matcore.hpp"

namespace adclab {

/// Positive operator-valued measure: PSD elements summing to identity
/// (both checked to 1e-9 on construction). outcome_labels[i] names the
/// message element i decides for; defaults to 0..N-1.
class Povm {
public:
    Povm() = default;  // empty; real instances go through the checked constructor
    explicit Povm(std::vector<ComplexMatrix> elements, std::vector<int> outcome_labels = {});

    int size() const { return static_cast<int>(elements_.size()); }
    int dim() const { return elements_.front().dim(); }
    const ComplexMatrix& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const std::vector<int>& outcome_labels() const { return outcome_labels_; }

private:
    std::vector<ComplexMatrix> elements_;
    std::vector<int> outcome_labels_;
};

struct DiscriminationResult {
    double success_probability = 0.0;
    Povm povm;
    double dual_gap = 0.0;  // Yuen-Kennedy-Lax certificate slack
    int iterations = 0;
    bool converged = false;
};

/// Σ_i p_i tr(ρ_i M_i). Values within 1e-10 of [0,1] are clamped to the
/// boundary; anything further out is a caller bug and is returned as-is.
double povm_success(const Povm& povm, const std::vector<DensityMatrix>& states, const std::vector<double>& priors);

/// Two-state minimum-error optimum for uniform priors:
/// P = 1/2 + 1/4 ||ρ_a - ρ_b||_tr, measured by projecting onto the
/// non-negative eigenspace of ρ_a - ρ_b (zero eigenvalues side with b).
DiscriminationResult helstrom(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// Minimum-error discrimination of N states by the fixed-point iteration
///   M_i <- G^{-1/2} R_i M_i R_i G^{-1/2},  G = Σ_j R_j M_j R_j,  R_i = p_i ρ_i
/// started from M_i = I/N. Accepted only when the YKL conditions certify
/// optimality to `tol`; otherwise converged=false carries the best iterate
/// and its measured gap.
DiscriminationResult optimal_multi(const std::vector<DensityMatrix>& states, const std::vector<double>& priors,
                                   double tol = 1e-7, int max_iter = 10000);

/// YKL certificate slack of an arbitrary POVM: with Y = 1/2 Σ_i (R_i M_i +
/// M_i R_i), returns max_i of -min-eig(Y - R_i). At most `tol` implies the
/// POVM is tol-optimal.
double ykl_gap(const Povm& povm, const std::vector<DensityMatrix>& states, const std::vector<double>& priors);

}  // namespace adclab

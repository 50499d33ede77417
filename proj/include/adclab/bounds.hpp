// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "adclab/errors.hpp"

namespace adclab {

/// Sphere-packing converse for an (n, M)-code on a binary symmetric channel
/// with crossover probability delta. L and lambda solve
/// (1-lambda) beta_L + lambda beta_{L+1} = 1/M, and the failure probability
/// of any code obeys epsilon >= 1 - (1-lambda) alpha_L - lambda alpha_{L+1}.
struct SpherePackingResult {
    int n = 0;
    int num_messages = 0;
    double delta = 0.0;
    int big_l = 0;  // may be -1 when 1/M hits beta_0 exactly
    double lambda = 0.0;
    double epsilon_lower = 0.0;
};

/// beta_ell = Σ_{k<=ell} C(n,k) 2^{-n}, computed from exact integer
/// binomials (n <= 64).
double beta(int n, int ell);

/// alpha_ell = Σ_{k<=ell} C(n,k) (1-delta)^{n-k} delta^k.
double alpha(int n, int ell, double delta);

SpherePackingResult sphere_packing(int n, int num_messages, double delta);

/// Failure probability of the diagonal two-codeword scheme on two BSC uses
/// with randomized tie decoding: 1 - (1-d)^2 - d(1-d) = d. It meets the
/// sphere-packing converse, which is why n = M = 2 is settled.
double repetition_code_failure(int n, double delta);

}  // namespace adclab

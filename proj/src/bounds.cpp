// SPDX-License-Identifier: Apache-2.0

#include "adclab/bounds.hpp"

#include <cmath>

namespace adclab {

namespace {

using u128 = unsigned __int128;

u128 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    u128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<u128>(n - k + i);
        r = r / static_cast<u128>(i);
    }
    return r;
}

void check_n_ell(int n, int ell) {
    if (n < 0 || n > 64) throw OutOfRangeError("n must lie in [0, 64]");
    if (ell < 0 || ell > n) throw OutOfRangeError("ell must lie in [0, n]");
}

}  // namespace

double beta(int n, int ell) {
    check_n_ell(n, ell);
    u128 sum = 0;
    for (int k = 0; k <= ell; ++k) sum += binomial(n, k);
    return std::ldexp(static_cast<double>(sum), -n);
}

double alpha(int n, int ell, double delta) {
    check_n_ell(n, ell);
    if (!(delta >= 0.0 && delta <= 1.0)) throw OutOfRangeError("delta must lie in [0, 1]");
    double sum = 0.0;
    for (int k = 0; k <= ell; ++k)
        sum += static_cast<double>(binomial(n, k)) * std::pow(1.0 - delta, n - k) * std::pow(delta, k);
    return sum;
}

SpherePackingResult sphere_packing(int n, int num_messages, double delta) {
    if (n < 1 || n > 64) throw OutOfRangeError("n must lie in [1, 64]");
    const double max_m = std::ldexp(1.0, n);
    if (num_messages < 2 || static_cast<double>(num_messages) > max_m)
        throw OutOfRangeError("num_messages must lie in [2, 2^n]");
    if (!(delta >= 0.0 && delta <= 0.5)) throw OutOfRangeError("delta must lie in [0, 1/2]");

    const double target = 1.0 / num_messages;

    // beta_{-1} = alpha_{-1} = 0 covers the boundary 1/M = beta_0; on exact
    // hits of beta_{L+1} the smaller L with lambda = 1 is chosen.
    auto beta_ext = [&](int ell) { return ell < 0 ? 0.0 : beta(n, ell); };
    auto alpha_ext = [&](int ell) { return ell < 0 ? 0.0 : alpha(n, ell, delta); };

    int big_l = -1;
    while (beta_ext(big_l + 1) < target) ++big_l;

    const double b_lo = beta_ext(big_l), b_hi = beta_ext(big_l + 1);
    const double lambda = (b_hi == b_lo) ? 1.0 : (target - b_lo) / (b_hi - b_lo);
    const double eps = 1.0 - (1.0 - lambda) * alpha_ext(big_l) - lambda * alpha_ext(big_l + 1);

    return SpherePackingResult{n, num_messages, delta, big_l, lambda, eps};
}

double repetition_code_failure(int n, double delta) {
    if (n != 2) throw OutOfRangeError("the diagonal-codeword construction is for n = 2");
    if (!(delta >= 0.0 && delta <= 1.0)) throw OutOfRangeError("delta must lie in [0, 1]");
    return 1.0 - (1.0 - delta) * (1.0 - delta) - delta * (1.0 - delta);
}

}  // namespace adclab

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adclab/channels.hpp"
#include "adclab/circuits.hpp"
#include "adclab/discrimination.hpp"
#include "adclab/optimize.hpp"

namespace adclab {

/// Encoding angles use the state-vector convention: R(theta) maps |0> to
/// cos(theta)|0> + sin(theta)|1>. The one- and two-bit schemes encode bit b
/// as the rotated basis state R(theta)|b> on each qubit (theta = 0 is bare
/// repetition, theta = pi/4 the Hadamard basis); the fixed circuit decoder
/// uses the diagonal pair sqrt(a)|0> ± sqrt(1-a)|1> with a = cos^2(theta).

enum class SchemeId {
    classical,
    coherent,
    quantum,
    circuit,
    ansatz_decoder_only,
    ansatz_encoder_and_decoder,
    ansatz_encoder_only_cnot,
    ansatz_decoder_only_cnot,
};

std::string_view scheme_name(SchemeId id);

struct SweepRecord {
    double gamma = 0.0;
    SchemeId scheme_id = SchemeId::classical;
    int uses = 1;
    int message_bits = 1;
    double success_probability = 0.0;
    double gain_vs_classical = 0.0;
    std::map<std::string, double> params;  // optimized angles, codebook mask, ...
};

struct SchemeCurve {
    std::vector<SweepRecord> records;  // strictly increasing gamma
};

/// Codewords (one '0'/'1' string per message, message index = position) and
/// the maximum-likelihood decode table over every received string.
struct Codebook {
    int message_bits = 0;
    int block_length = 0;
    std::vector<std::string> codewords;
    std::map<std::string, int> decode_map;
};

/// P_c = 1 - gamma^m / 2: m-fold repetition with "any received 1 means 1".
double classical_success(double gamma, int m);

/// Exhaustively checks that no two-codeword codebook over m <= 4 uses beats
/// the repetition scheme under maximum-likelihood decoding.
bool verify_classical_optimality(double gamma, int m);

/// Separable scheme: every qubit carries R(theta_enc)|b>, is rotated by a
/// decoding angle after the channel and read in Z; any 1 decodes to 1.
/// Encoder and decoder angles are optimized jointly, so the classical
/// repetition point (both angles zero) is always available.
SweepRecord coherent_onebit(double gamma, int m);

/// Optimum over the same codeword family: the encoding angle is optimized,
/// the decoder is the (implicit) optimal joint measurement on all m qubits.
SweepRecord quantum_onebit(double gamma, int m);

/// The fixed two-qubit scheme that is implementable as a circuit: |±>⊗|±>
/// encoding, decoding by V and a top-qubit readout. No free parameters.
SweepRecord circuit_decoder_onebit(double gamma);

struct AlphaSweepResult {
    double best_alpha = 0.5;
    std::vector<std::pair<double, double>> curve;  // (alpha, success)
};

/// Success of the V-circuit decoder under sqrt(a)|0> ± sqrt(1-a)|1>
/// encoding, per alpha in [0.5, 1).
AlphaSweepResult alpha_encoder_sweep(double gamma, const std::vector<double>& alphas);

struct TwoBitResult {
    SweepRecord record;
    Codebook codebook;
};

/// Two-bit message over three channel uses. All C(8,4) = 70 codeword
/// subsets are searched; ML ties break to the lowest message index.
TwoBitResult classical_twobit(double gamma);

/// Same search with one shared encoding rotation on each qubit and one
/// shared decoding rotation before the per-qubit Z readout.
TwoBitResult coherent_twobit(double gamma);

/// Certified optimum: per subset the encoding rotation is optimized and the
/// four channel outputs are discriminated by optimal_multi. Subsets
/// equivalent under qubit permutation are solved once. The record carries
/// the winning subset, angle and YKL gap; there is no string decode table
/// because the decoder is a joint measurement.
SweepRecord quantum_twobit(double gamma, double tol = 1e-7);

enum class AnsatzOptMode { PER_GAMMA, FIXED_AVERAGE };

/// Success of one ansatz layout at fixed parameters: |bb> through the
/// layout's encoder, the channel on each qubit, the decoder, a per-qubit Z
/// readout and the any-1 mapping.
double ansatz_success(double gamma, AnsatzLayout layout, const std::vector<double>& params);

/// Appendix-style encoder/decoder ansatz curves: the message enters as
/// |bb>, runs through the layout's encoder, the channel, the decoder, and a
/// per-qubit Z readout with the any-1 mapping. PER_GAMMA optimizes the
/// rotations at each grid point, FIXED_AVERAGE optimizes a single parameter
/// set for the best grid-average success.
SchemeCurve ansatz_compare(const std::vector<double>& gamma_grid, AnsatzLayout layout, AnsatzOptMode mode,
                           int restarts = 8, unsigned seed = 0);

/// (p - p_classical) / p_classical.
double gain(double p, double p_classical);

/// Shared helpers for the schemes above (also used by the verification
/// commands): channel output of cos(t)|0> + sign sin(t)|1>.
DensityMatrix damped_codeword(double gamma, double theta, int sign);

ComplexMatrix tensor_power(const ComplexMatrix& m, int count);

}  // namespace adclab

// SPDX-License-Identifier: Apache-2.0

#include "adclab/schemes.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace adclab {

namespace {

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw OutOfRangeError("gamma must lie in [0, 1]");
}

void check_uses(int m) {
    if (m != 1 && m != 2 && m != 4 && m != 8) throw OutOfRangeError("supported block lengths are 1, 2, 4, 8");
}

ComplexMatrix conj_by(const ComplexMatrix& u, const ComplexMatrix& m) { return u * m * u.adjoint(); }

// P(read 0) for one qubit: encode cos(te)|0> + sin(te)|1>, damp, rotate by
// td, project on |0>. Closed form of the rotate-damp-rotate chain; the
// matrix route damped_codeword() must agree and the tests pin that down.
double read0_prob(double gamma, double te, double td) {
    const double x = std::cos(te), y = std::sin(te);
    const double m00 = x * x + gamma * y * y;
    const double m01 = x * y * std::sqrt(1.0 - gamma);
    const double m11 = (1.0 - gamma) * y * y;
    const double cd = std::cos(td), sd = std::sin(td);
    return cd * cd * m00 - 2.0 * cd * sd * m01 + sd * sd * m11;
}

std::string bits_to_string(unsigned bits, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int k = 0; k < n; ++k)
        if (bits & (1u << (n - 1 - k))) s[static_cast<size_t>(k)] = '1';
    return s;
}

double subset_mask(const std::array<unsigned, 4>& subset) {
    double mask = 0.0;
    for (unsigned c : subset) mask += std::ldexp(1.0, static_cast<int>(c));
    return mask;
}

}  // namespace

std::string_view scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::classical: return "classical";
        case SchemeId::coherent: return "coherent";
        case SchemeId::quantum: return "quantum";
        case SchemeId::circuit: return "circuit";
        case SchemeId::ansatz_decoder_only: return "ansatz_decoder_only";
        case SchemeId::ansatz_encoder_and_decoder: return "ansatz_encoder_and_decoder";
        case SchemeId::ansatz_encoder_only_cnot: return "ansatz_encoder_only_cnot";
        case SchemeId::ansatz_decoder_only_cnot: return "ansatz_decoder_only_cnot";
    }
    return "unknown";
}

double classical_success(double gamma, int m) {
    check_gamma(gamma);
    if (m < 1) throw OutOfRangeError("m must be positive");
    return 1.0 - 0.5 * std::pow(gamma, m);
}

bool verify_classical_optimality(double gamma, int m) {
    check_gamma(gamma);
    if (m < 1 || m > 4) throw OutOfRangeError("exhaustive check supports m in [1, 4]");
    const double baseline = classical_success(gamma, m);
    const unsigned count = 1u << m;
    for (unsigned c0 = 0; c0 < count; ++c0) {
        for (unsigned c1 = c0 + 1; c1 < count; ++c1) {
            double success = 0.0;
            for (unsigned y = 0; y < count; ++y)
                success += 0.5 * std::max(z_channel_bits_prob(gamma, c0, y, m), z_channel_bits_prob(gamma, c1, y, m));
            if (success > baseline + 1e-12) return false;
        }
    }
    return true;
}

DensityMatrix damped_codeword(double gamma, double theta, int sign) {
    const double c = std::cos(theta), s = std::sin(theta) * (sign >= 0 ? 1.0 : -1.0);
    const Ket psi = Ket::normalized({c, s});
    return apply_channel(adc_kraus(gamma), DensityMatrix::pure(psi));
}

ComplexMatrix tensor_power(const ComplexMatrix& m, int count) {
    if (count < 1) throw OutOfRangeError("tensor_power needs count >= 1");
    ComplexMatrix out = m;
    for (int k = 1; k < count; ++k) out = tensor(out, m);
    return out;
}

namespace {

// Codeword b puts every qubit in R(theta)|b>, i.e. the rotated basis pair;
// theta = 0 is the bare repetition code, so the classical scheme is inside
// the family. Decoding rotates by theta_dec, reads Z on each qubit and maps
// any 1 to message 1.
double coherent_success(double gamma, int m, double theta_enc, double theta_dec) {
    const double a = read0_prob(gamma, theta_enc, theta_dec);
    const double b = read0_prob(gamma, theta_enc + M_PI / 2.0, theta_dec);
    return 0.5 * (std::pow(a, m) + 1.0 - std::pow(b, m));
}

}  // namespace

SweepRecord coherent_onebit(double gamma, int m) {
    check_gamma(gamma);
    check_uses(m);

    const auto inner_best = [&](double theta_enc) {
        return maximize_scalar([&](double td) { return coherent_success(gamma, m, theta_enc, td); }, -M_PI / 2.0,
                               M_PI / 2.0, 1e-6);
    };
    const auto outer = maximize_scalar([&](double te) { return inner_best(te).best_value; }, 0.0, M_PI / 2.0, 1e-6);

    const double theta_enc = outer.best_params[0];
    const auto inner = inner_best(theta_enc);

    SweepRecord rec;
    rec.gamma = gamma;
    rec.scheme_id = SchemeId::coherent;
    rec.uses = m;
    rec.message_bits = 1;
    rec.success_probability = inner.best_value;
    rec.gain_vs_classical = gain(rec.success_probability, classical_success(gamma, m));
    rec.params = {{"theta_dec", inner.best_params[0]}, {"theta_enc", theta_enc}};
    return rec;
}

SweepRecord quantum_onebit(double gamma, int m) {
    check_gamma(gamma);
    check_uses(m);

    // same rotated-basis codewords as the coherent scheme, but decoded by
    // the optimal joint measurement, whose success is set by the trace
    // distance of the two block states
    const auto objective = [&](double theta) {
        const ComplexMatrix p = tensor_power(damped_codeword(gamma, theta, +1).matrix(), m);
        const ComplexMatrix q = tensor_power(damped_codeword(gamma, theta + M_PI / 2.0, +1).matrix(), m);
        return 0.5 + 0.25 * trace_norm(p - q);
    };
    const auto best = maximize_scalar(objective, 0.0, M_PI / 2.0, 1e-4);

    SweepRecord rec;
    rec.gamma = gamma;
    rec.scheme_id = SchemeId::quantum;
    rec.uses = m;
    rec.message_bits = 1;
    rec.success_probability = best.best_value;
    rec.gain_vs_classical = gain(rec.success_probability, classical_success(gamma, m));
    rec.params = {{"theta_enc", best.best_params[0]}};
    return rec;
}

namespace {

const Povm& v_povm() {
    static const Povm povm = measurement_povm(build_v(), 0);
    return povm;
}

double v_decoder_success(double gamma, double alpha) {
    const double theta = std::acos(std::sqrt(alpha));
    const DensityMatrix plus = damped_codeword(gamma, theta, +1);
    const DensityMatrix minus = damped_codeword(gamma, theta, -1);
    return povm_success(v_povm(), {tensor(plus, plus), tensor(minus, minus)}, {0.5, 0.5});
}

}  // namespace

SweepRecord circuit_decoder_onebit(double gamma) {
    check_gamma(gamma);
    SweepRecord rec;
    rec.gamma = gamma;
    rec.scheme_id = SchemeId::circuit;
    rec.uses = 2;
    rec.message_bits = 1;
    rec.success_probability = v_decoder_success(gamma, 0.5);
    rec.gain_vs_classical = gain(rec.success_probability, classical_success(gamma, 2));
    return rec;
}

AlphaSweepResult alpha_encoder_sweep(double gamma, const std::vector<double>& alphas) {
    check_gamma(gamma);
    if (alphas.empty()) throw OutOfRangeError("alpha grid must not be empty");
    AlphaSweepResult res;
    double best = -1.0;
    for (double a : alphas) {
        if (!(a >= 0.5 && a < 1.0)) throw OutOfRangeError("alpha must lie in [0.5, 1)");
        const double s = v_decoder_success(gamma, a);
        res.curve.emplace_back(a, s);
        if (s > best) {
            best = s;
            res.best_alpha = a;
        }
    }
    return res;
}

namespace {

constexpr int kTwoBitUses = 3;
constexpr int kTwoBitMessages = 4;

// all C(8,4) four-codeword subsets of the 3-bit strings, lexicographic
const std::vector<std::array<unsigned, 4>>& all_twobit_subsets() {
    static const std::vector<std::array<unsigned, 4>> subsets = [] {
        std::vector<std::array<unsigned, 4>> out;
        for (unsigned a = 0; a < 8; ++a)
            for (unsigned b = a + 1; b < 8; ++b)
                for (unsigned c = b + 1; c < 8; ++c)
                    for (unsigned d = c + 1; d < 8; ++d) out.push_back({a, b, c, d});
        return out;
    }();
    return subsets;
}

unsigned permute_bits(unsigned v, const std::array<int, 3>& perm) {
    // output position k takes input position perm[k]
    unsigned out = 0;
    for (int k = 0; k < 3; ++k) {
        const int from = perm[static_cast<size_t>(k)];
        if (v & (1u << (2 - from))) out |= 1u << (2 - k);
    }
    return out;
}

// subsets equivalent under a qubit permutation pose the same decoding
// problem for every scheme here, so one representative per class is enough
const std::vector<std::array<unsigned, 4>>& twobit_subset_classes() {
    static const std::vector<std::array<unsigned, 4>> reps = [] {
        const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        std::vector<std::array<unsigned, 4>> out;
        for (const auto& s : all_twobit_subsets()) {
            std::array<unsigned, 4> canon = s;
            for (const auto& perm : perms) {
                std::array<unsigned, 4> mapped{};
                for (size_t i = 0; i < 4; ++i) mapped[i] = permute_bits(s[i], perm);
                std::sort(mapped.begin(), mapped.end());
                if (mapped < canon) canon = mapped;
            }
            if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(canon);
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return reps;
}

Codebook make_codebook(const std::array<unsigned, 4>& codewords, const std::array<int, 8>& decode) {
    Codebook cb;
    cb.message_bits = 2;
    cb.block_length = kTwoBitUses;
    for (unsigned c : codewords) cb.codewords.push_back(bits_to_string(c, kTwoBitUses));
    for (unsigned y = 0; y < 8; ++y) cb.decode_map[bits_to_string(y, kTwoBitUses)] = decode[y];
    return cb;
}

// ML success for uniform messages given P(y | message); the decode table
// gets the lowest-index argmax
double ml_success(const std::array<std::array<double, 8>, 4>& py_given_msg, std::array<int, 8>& decode) {
    double success = 0.0;
    for (unsigned y = 0; y < 8; ++y) {
        int best_msg = 0;
        double best_p = py_given_msg[0][y];
        for (int msg = 1; msg < kTwoBitMessages; ++msg) {
            if (py_given_msg[static_cast<size_t>(msg)][y] > best_p) {
                best_p = py_given_msg[static_cast<size_t>(msg)][y];
                best_msg = msg;
            }
        }
        decode[y] = best_msg;
        success += 0.25 * best_p;
    }
    return success;
}

// P(y | codeword) for product encodings from per-qubit readout
// probabilities q[b][z] = P(read z | basis bit b)
void product_outcome_probs(const std::array<std::array<double, 2>, 2>& q, const std::array<unsigned, 4>& subset,
                           std::array<std::array<double, 8>, 4>& p) {
    for (int msg = 0; msg < kTwoBitMessages; ++msg) {
        const unsigned c = subset[static_cast<size_t>(msg)];
        for (unsigned y = 0; y < 8; ++y) {
            double prob = 1.0;
            for (int k = 0; k < kTwoBitUses; ++k) {
                const int cb = (c >> (kTwoBitUses - 1 - k)) & 1;
                const int yb = (y >> (kTwoBitUses - 1 - k)) & 1;
                prob *= q[static_cast<size_t>(cb)][static_cast<size_t>(yb)];
            }
            p[static_cast<size_t>(msg)][y] = prob;
        }
    }
}

// basis bit b rotated by te is cos(te + b*pi/2)|0> + sin(te + b*pi/2)|1>
std::array<std::array<double, 2>, 2> rotated_readout_probs(double gamma, double te, double td) {
    std::array<std::array<double, 2>, 2> q{};
    for (int b = 0; b < 2; ++b) {
        const double p0 = read0_prob(gamma, te + b * M_PI / 2.0, td);
        q[static_cast<size_t>(b)][0] = p0;
        q[static_cast<size_t>(b)][1] = 1.0 - p0;
    }
    return q;
}

SweepRecord make_twobit_record(double gamma, SchemeId id, double success, double classical_baseline,
                               std::map<std::string, double> params) {
    SweepRecord rec;
    rec.gamma = gamma;
    rec.scheme_id = id;
    rec.uses = kTwoBitUses;
    rec.message_bits = 2;
    rec.success_probability = success;
    rec.gain_vs_classical = gain(success, classical_baseline);
    rec.params = std::move(params);
    return rec;
}

}  // namespace

TwoBitResult classical_twobit(double gamma) {
    check_gamma(gamma);

    double best_success = -1.0;
    std::array<unsigned, 4> best_subset{};
    std::array<int, 8> best_decode{};
    for (const auto& subset : all_twobit_subsets()) {
        std::array<std::array<double, 8>, 4> p{};
        for (int msg = 0; msg < kTwoBitMessages; ++msg)
            for (unsigned y = 0; y < 8; ++y)
                p[static_cast<size_t>(msg)][y] =
                    z_channel_bits_prob(gamma, subset[static_cast<size_t>(msg)], y, kTwoBitUses);
        std::array<int, 8> decode{};
        const double success = ml_success(p, decode);
        if (success > best_success + 1e-15) {
            best_success = success;
            best_subset = subset;
            best_decode = decode;
        }
    }

    TwoBitResult out;
    out.codebook = make_codebook(best_subset, best_decode);
    out.record = make_twobit_record(gamma, SchemeId::classical, best_success, best_success,
                                    {{"subset_mask", subset_mask(best_subset)}});
    return out;
}

TwoBitResult coherent_twobit(double gamma) {
    check_gamma(gamma);

    double best_success = -1.0;
    std::array<unsigned, 4> best_subset{};
    double best_enc = 0.0, best_dec = 0.0;

    for (const auto& subset : all_twobit_subsets()) {
        const auto subset_success = [&](double te, double td) {
            std::array<std::array<double, 8>, 4> p{};
            product_outcome_probs(rotated_readout_probs(gamma, te, td), subset, p);
            std::array<int, 8> decode{};
            return ml_success(p, decode);
        };
        const auto inner_best = [&](double te) {
            return maximize_scalar([&](double td) { return subset_success(te, td); }, -M_PI / 2.0, M_PI / 2.0, 1e-5);
        };
        const auto outer =
            maximize_scalar([&](double te) { return inner_best(te).best_value; }, -M_PI / 2.0, M_PI / 2.0, 1e-5);
        if (outer.best_value > best_success + 1e-15) {
            best_success = outer.best_value;
            best_subset = subset;
            best_enc = outer.best_params[0];
            best_dec = inner_best(best_enc).best_params[0];
        }
    }

    // freeze the decode table at the winning parameters
    std::array<std::array<double, 8>, 4> p{};
    product_outcome_probs(rotated_readout_probs(gamma, best_enc, best_dec), best_subset, p);
    std::array<int, 8> decode{};
    const double success = ml_success(p, decode);

    TwoBitResult out;
    out.codebook = make_codebook(best_subset, decode);
    out.record = make_twobit_record(
        gamma, SchemeId::coherent, success, classical_twobit(gamma).record.success_probability,
        {{"subset_mask", subset_mask(best_subset)}, {"theta_dec", best_dec}, {"theta_enc", best_enc}});
    return out;
}

namespace {

std::vector<DensityMatrix> twobit_quantum_states(double gamma, double theta, const std::array<unsigned, 4>& subset) {
    const KrausChannel ch = adc_kraus(gamma);
    std::array<ComplexMatrix, 2> tau;
    for (int b = 0; b < 2; ++b) {
        const Ket psi = Ket::normalized({std::cos(theta + b * M_PI / 2.0), std::sin(theta + b * M_PI / 2.0)});
        tau[static_cast<size_t>(b)] = apply_channel(ch, DensityMatrix::pure(psi)).matrix();
    }

    std::vector<DensityMatrix> states;
    states.reserve(4);
    for (unsigned c : subset) {
        ComplexMatrix m = tau[(c >> 2) & 1];
        m = tensor(m, tau[(c >> 1) & 1]);
        m = tensor(m, tau[c & 1]);
        states.emplace_back(std::move(m), kTwoBitUses);
    }
    return states;
}

}  // namespace

SweepRecord quantum_twobit(double gamma, double tol) {
    check_gamma(gamma);
    const std::vector<double> priors(4, 0.25);
    const double search_tol = std::max(tol, 1e-6);

    double best_success = -1.0;
    std::array<unsigned, 4> best_subset{};
    double best_theta = 0.0;

    for (const auto& subset : twobit_subset_classes()) {
        const auto objective = [&](double theta) {
            return optimal_multi(twobit_quantum_states(gamma, theta, subset), priors, search_tol).success_probability;
        };
        const auto opt = maximize_scalar(objective, -M_PI / 2.0, M_PI / 2.0, 1e-4);
        if (opt.best_value > best_success + 1e-15) {
            best_success = opt.best_value;
            best_subset = subset;
            best_theta = opt.best_params[0];
        }
    }

    // certify the winner at the requested tolerance
    const auto final_res = optimal_multi(twobit_quantum_states(gamma, best_theta, best_subset), priors, tol);

    return make_twobit_record(gamma, SchemeId::quantum, final_res.success_probability,
                              classical_twobit(gamma).record.success_probability,
                              {{"converged", final_res.converged ? 1.0 : 0.0},
                               {"dual_gap", final_res.dual_gap},
                               {"subset_mask", subset_mask(best_subset)},
                               {"theta_enc", best_theta}});
}

namespace {

SchemeId ansatz_scheme_id(AnsatzLayout layout) {
    switch (layout) {
        case AnsatzLayout::DECODER_ONLY: return SchemeId::ansatz_decoder_only;
        case AnsatzLayout::ENCODER_AND_DECODER: return SchemeId::ansatz_encoder_and_decoder;
        case AnsatzLayout::ENCODER_ONLY_CNOT: return SchemeId::ansatz_encoder_only_cnot;
        case AnsatzLayout::DECODER_ONLY_CNOT: return SchemeId::ansatz_decoder_only_cnot;
    }
    throw OutOfRangeError("unknown ansatz layout");
}

SweepRecord ansatz_record(double gamma, AnsatzLayout layout, const std::vector<double>& params, double success) {
    SweepRecord rec;
    rec.gamma = gamma;
    rec.scheme_id = ansatz_scheme_id(layout);
    rec.uses = 2;
    rec.message_bits = 1;
    rec.success_probability = success;
    rec.gain_vs_classical = gain(success, classical_success(gamma, 2));
    for (size_t i = 0; i < params.size(); ++i) rec.params["theta_" + std::to_string(i)] = params[i];
    return rec;
}

}  // namespace

double ansatz_success(double gamma, AnsatzLayout layout, const std::vector<double>& params) {
    check_gamma(gamma);
    const EncoderDecoderPair pair = ansatz_circuit(layout, params);
    const ComplexMatrix ue = circuit_unitary(pair.encoder);
    const ComplexMatrix ud = circuit_unitary(pair.decoder);
    const KrausChannel ch = adc_kraus(gamma);

    double p_all_zero[2];
    for (int b = 0; b < 2; ++b) {
        const Ket in = Ket::basis(4, b == 0 ? 0 : 3);  // |00> or |11>
        const DensityMatrix encoded = DensityMatrix::pure(apply(ue, in));
        const ComplexMatrix out = conj_by(ud, apply_per_qubit(ch, encoded).matrix());
        p_all_zero[b] = out(0, 0).real();
    }
    return 0.5 * (p_all_zero[0] + 1.0 - p_all_zero[1]);
}

SchemeCurve ansatz_compare(const std::vector<double>& gamma_grid, AnsatzLayout layout, AnsatzOptMode mode,
                           int restarts, unsigned seed) {
    if (gamma_grid.empty()) throw OutOfRangeError("gamma grid must not be empty");
    for (size_t i = 0; i < gamma_grid.size(); ++i) {
        check_gamma(gamma_grid[i]);
        if (i > 0 && !(gamma_grid[i] > gamma_grid[i - 1]))
            throw OutOfRangeError("gamma grid must be strictly increasing");
    }

    const std::vector<double> x0(static_cast<size_t>(ansatz_param_count(layout)), 0.0);
    SchemeCurve curve;

    if (mode == AnsatzOptMode::PER_GAMMA) {
        // warm-start each point from its neighbour: the optimum moves
        // continuously in gamma, and the shared start keeps the two layouts'
        // curves comparable at the 1e-4 level
        std::vector<double> start = x0;
        for (double g : gamma_grid) {
            const auto res = maximize_simplex(
                [&](const std::vector<double>& p) { return ansatz_success(g, layout, p); }, start, restarts, 1e-6,
                seed);
            start = res.best_params;
            curve.records.push_back(ansatz_record(g, layout, res.best_params, res.best_value));
        }
        return curve;
    }

    const auto res = maximize_simplex(
        [&](const std::vector<double>& p) {
            double sum = 0.0;
            for (double g : gamma_grid) sum += ansatz_success(g, layout, p);
            return sum / static_cast<double>(gamma_grid.size());
        },
        x0, restarts, 1e-6, seed);
    for (double g : gamma_grid)
        curve.records.push_back(ansatz_record(g, layout, res.best_params, ansatz_success(g, layout, res.best_params)));
    return curve;
}

double gain(double p, double p_classical) {
    if (!(p_classical > 0.0)) throw DivideByZeroError("gain: classical baseline must be positive");
    return p / p_classical - 1.0;
}

}  // namespace adclab

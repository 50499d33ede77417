// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "adclab/discrimination.hpp"
#include "adclab/schemes.hpp"

using namespace adclab;

namespace {

// frozen regression constants for the optimized schemes at gamma = 0.9
constexpr double kCoherentTwoUse09 = 0.701903327355011;
constexpr double kQuantumTwoUse09 = 0.714343947863478;
constexpr double kCoherentTwoBit09 = 0.451926094685709;
constexpr double kQuantumTwoBit09 = 0.506202504095933;

double circuit_closed_form(double g) { return 0.5 + (1.0 + g) * std::sqrt(1.0 - g) / (2.0 * std::sqrt(2.0)); }

}  // namespace

TEST_CASE("classical repetition success") {
    CHECK(classical_success(0.0, 3) == 1.0);
    CHECK(classical_success(1.0, 5) == 0.5);
    CHECK(classical_success(0.9, 2) == doctest::Approx(0.595).epsilon(1e-15));
    CHECK_THROWS_AS(classical_success(1.5, 2), OutOfRangeError);
    CHECK_THROWS_AS(classical_success(0.5, 0), OutOfRangeError);

    // exhaustive oracle: best two-codeword code with ML decoding, m = 2
    const double g = 0.9;
    double best = 0.0;
    for (unsigned c0 = 0; c0 < 4; ++c0)
        for (unsigned c1 = c0 + 1; c1 < 4; ++c1) {
            double s = 0.0;
            for (unsigned y = 0; y < 4; ++y)
                s += 0.5 * std::max(z_channel_bits_prob(g, c0, y, 2), z_channel_bits_prob(g, c1, y, 2));
            best = std::max(best, s);
        }
    CHECK(best == doctest::Approx(classical_success(g, 2)).epsilon(1e-12));
}

TEST_CASE("repetition is exhaustively optimal") {
    CHECK(verify_classical_optimality(0.5, 2));
    CHECK(verify_classical_optimality(0.9, 3));
    CHECK(verify_classical_optimality(0.0, 1));
    CHECK(verify_classical_optimality(0.37, 4));
    CHECK_THROWS_AS(verify_classical_optimality(0.5, 5), OutOfRangeError);
}

TEST_CASE("coherent one-bit reduces to the single-qubit optimum at m = 1") {
    for (double g : {0.0, 0.25, 0.5, 0.75, 0.83, 0.95}) {
        const auto rec = coherent_onebit(g, 1);
        CHECK(std::abs(rec.success_probability - (1.0 + std::sqrt(1.0 - g)) / 2.0) <= 1e-9);
    }
}

TEST_CASE("coherent one-bit peak gain at the Hadamard angle") {
    const auto rec = coherent_onebit(0.830, 1);
    CHECK(rec.gain_vs_classical == doctest::Approx(0.20710).epsilon(2e-4));
    CHECK(std::abs(rec.params.at("theta_enc") - M_PI / 4.0) <= 1e-2);
}

TEST_CASE("coherent one-bit regression at two uses") {
    const auto rec = coherent_onebit(0.9, 2);
    CHECK(rec.success_probability == doctest::Approx(kCoherentTwoUse09).epsilon(1e-9));
    CHECK(rec.uses == 2);
    CHECK(rec.message_bits == 1);
    // the record reproduces itself from its own parameters
    const double te = rec.params.at("theta_enc"), td = rec.params.at("theta_dec");
    const auto r = ComplexMatrix::from_rows({{std::cos(td), -std::sin(td)}, {std::sin(td), std::cos(td)}});
    const auto rp = r * damped_codeword(0.9, te, +1).matrix() * r.adjoint();
    const auto rm = r * damped_codeword(0.9, te + M_PI / 2.0, +1).matrix() * r.adjoint();
    const double a = rp(0, 0).real(), b = rm(0, 0).real();
    CHECK(std::abs(0.5 * (a * a + 1.0 - b * b) - rec.success_probability) <= 1e-10);
}

TEST_CASE("scheme endpoints at zero and full damping") {
    for (int m : {1, 2, 4, 8}) {
        CHECK(coherent_onebit(0.0, m).success_probability >= 1.0 - 1e-6);
        CHECK(quantum_onebit(0.0, m).success_probability >= 1.0 - 1e-6);
        CHECK(coherent_onebit(1.0, m).success_probability == doctest::Approx(0.5).epsilon(1e-6));
        CHECK(quantum_onebit(1.0, m).success_probability == doctest::Approx(0.5).epsilon(1e-6));
    }
    CHECK_THROWS_AS(coherent_onebit(0.5, 3), OutOfRangeError);
    CHECK_THROWS_AS(quantum_onebit(0.5, 5), OutOfRangeError);
}

TEST_CASE("quantum one-bit regression and its discrimination oracle") {
    const auto rec = quantum_onebit(0.9, 2);
    CHECK(rec.success_probability == doctest::Approx(kQuantumTwoUse09).epsilon(1e-9));

    // an independent route: the certified multi-state solver on the same pair
    const double theta = rec.params.at("theta_enc");
    const DensityMatrix a(tensor_power(damped_codeword(0.9, theta, +1).matrix(), 2), 2);
    const DensityMatrix b(tensor_power(damped_codeword(0.9, theta + M_PI / 2.0, +1).matrix(), 2), 2);
    const auto solver = optimal_multi({a, b}, {0.5, 0.5});
    REQUIRE(solver.converged);
    CHECK(std::abs(solver.success_probability - rec.success_probability) <= 1e-6);
}

TEST_CASE("quantum one-bit eight-use gain matches the large-damping peak") {
    const auto rec = quantum_onebit(0.977, 8);
    CHECK(rec.gain_vs_classical == doctest::Approx(0.20533).epsilon(5e-3));
}

TEST_CASE("the circuit decoder follows its closed form") {
    for (double g : {0.0, 0.2, 0.5, 0.75, 0.9, 1.0}) {
        const auto rec = circuit_decoder_onebit(g);
        CHECK(std::abs(rec.success_probability - circuit_closed_form(g)) <= 1e-12);
    }
    CHECK(circuit_decoder_onebit(0.0).success_probability ==
          doctest::Approx(0.5 + 0.25 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(circuit_decoder_onebit(1.0).success_probability == doctest::Approx(0.5).epsilon(1e-12));
    const auto g09 = circuit_decoder_onebit(0.9);
    CHECK(g09.gain_vs_classical >= 0.189);
    CHECK(g09.gain_vs_classical <= 0.213);
}

TEST_CASE("alpha sweep behaviour") {
    std::vector<double> alphas;
    for (int i = 0; i < 100; ++i) alphas.push_back(0.5 + 0.005 * i);

    const auto res = alpha_encoder_sweep(0.9, alphas);
    CHECK(res.curve.front().second == circuit_decoder_onebit(0.9).success_probability);
    double best = -1.0;
    for (const auto& [a, s] : res.curve) best = std::max(best, s);
    CHECK(res.curve.front().second >= best - 0.005);

    // the encoding degenerates as alpha approaches one
    const auto tail = alpha_encoder_sweep(0.9, {0.999999});
    CHECK(std::abs(tail.curve.front().second - 0.5) <= 1e-2);

    CHECK_THROWS_AS(alpha_encoder_sweep(0.9, {0.4}), OutOfRangeError);
    CHECK_THROWS_AS(alpha_encoder_sweep(0.9, {1.0}), OutOfRangeError);
}

TEST_CASE("classical two-bit endpoints and regression") {
    CHECK(classical_twobit(0.0).record.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classical_twobit(1.0).record.success_probability == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(classical_twobit(0.9).record.success_probability == doctest::Approx(0.32725).epsilon(1e-12));

    const auto cb = classical_twobit(0.6).codebook;
    CHECK(cb.codewords.size() == 4);
    CHECK(cb.decode_map.size() == 8);
    for (size_t i = 0; i < cb.codewords.size(); ++i)
        for (size_t j = i + 1; j < cb.codewords.size(); ++j) CHECK(cb.codewords[i] != cb.codewords[j]);
    // decoding a clean codeword returns its message
    for (int msg = 0; msg < 4; ++msg) {
        const auto it = cb.decode_map.find(cb.codewords[static_cast<size_t>(msg)]);
        REQUIRE(it != cb.decode_map.end());
        // ties can steal a codeword only when likelihoods coincide; at 0.6 they do not
        CHECK(it->second == msg);
    }
}

TEST_CASE("coherent two-bit endpoints and regression") {
    CHECK(coherent_twobit(0.0).record.success_probability >= 1.0 - 1e-6);
    CHECK(coherent_twobit(1.0).record.success_probability == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(coherent_twobit(0.9).record.success_probability == doctest::Approx(kCoherentTwoBit09).epsilon(1e-7));
}

TEST_CASE("quantum two-bit is certified and ordered" * doctest::timeout(300)) {
    const auto q0 = quantum_twobit(0.0);
    CHECK(q0.success_probability >= 1.0 - 1e-6);
    const auto q1 = quantum_twobit(1.0);
    CHECK(q1.success_probability == doctest::Approx(0.25).epsilon(1e-6));

    const auto q = quantum_twobit(0.9);
    CHECK(q.success_probability == doctest::Approx(kQuantumTwoBit09).epsilon(1e-6));
    CHECK(q.params.at("converged") == 1.0);
    CHECK(q.params.at("dual_gap") <= 1e-7);

    const double cl = classical_twobit(0.9).record.success_probability;
    const double co = coherent_twobit(0.9).record.success_probability;
    CHECK(q.success_probability >= co - 1e-9);
    CHECK(co >= cl - 1e-9);
}

TEST_CASE("one-bit schemes are ordered and improve with block length") {
    for (double g : {0.2, 0.55, 0.9}) {
        double prev_quantum = 0.0;
        for (int m : {1, 2, 4, 8}) {
            const double cl = classical_success(g, m);
            const double co = coherent_onebit(g, m).success_probability;
            const double qu = quantum_onebit(g, m).success_probability;
            CHECK(co >= cl - 1e-9);
            CHECK(qu >= co - 1e-9);
            CHECK(qu >= prev_quantum - 1e-9);
            prev_quantum = qu;
        }
    }
}

TEST_CASE("records recompute their own gain") {
    for (const SweepRecord& rec : {coherent_onebit(0.7, 2), quantum_onebit(0.7, 2), circuit_decoder_onebit(0.7)}) {
        CHECK(std::abs(rec.gain_vs_classical - gain(rec.success_probability, classical_success(0.7, rec.uses))) <=
              1e-12);
    }
    const auto two = coherent_twobit(0.7);
    CHECK(std::abs(two.record.gain_vs_classical -
                   gain(two.record.success_probability, classical_twobit(0.7).record.success_probability)) <= 1e-12);
}

TEST_CASE("gain arithmetic") {
    CHECK(gain(0.5, 0.5) == 0.0);
    CHECK(gain(0.70616, 0.585) == doctest::Approx(0.2071).epsilon(1e-3));
    CHECK(gain(0.5, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(gain(0.5, 0.0), DivideByZeroError);
}

TEST_CASE("ansatz curves reach one at zero damping") {
    const std::vector<double> grid = {0.0, 0.5};
    for (auto layout : {AnsatzLayout::DECODER_ONLY, AnsatzLayout::ENCODER_AND_DECODER,
                        AnsatzLayout::ENCODER_ONLY_CNOT, AnsatzLayout::DECODER_ONLY_CNOT}) {
        const auto curve = ansatz_compare(grid, layout, AnsatzOptMode::PER_GAMMA, 4, 0);
        REQUIRE(curve.records.size() == 2);
        CHECK(curve.records[0].success_probability >= 1.0 - 1e-6);
        CHECK(curve.records[0].gamma == 0.0);
        // records reproduce from their stored parameters
        std::vector<double> params;
        for (int i = 0; i < ansatz_param_count(layout); ++i)
            params.push_back(curve.records[1].params.at("theta_" + std::to_string(i)));
        CHECK(std::abs(ansatz_success(0.5, layout, params) - curve.records[1].success_probability) <= 1e-10);
    }
}

TEST_CASE("fixed-average ansatz uses one parameter set") {
    const std::vector<double> grid = {0.0, 0.3, 0.6, 0.9};
    const auto curve = ansatz_compare(grid, AnsatzLayout::DECODER_ONLY_CNOT, AnsatzOptMode::FIXED_AVERAGE, 4, 0);
    REQUIRE(curve.records.size() == 4);
    for (size_t i = 1; i < curve.records.size(); ++i) CHECK(curve.records[i].params == curve.records[0].params);
}

TEST_CASE("ansatz grid validation") {
    CHECK_THROWS_AS(ansatz_compare({}, AnsatzLayout::DECODER_ONLY, AnsatzOptMode::PER_GAMMA), OutOfRangeError);
    CHECK_THROWS_AS(ansatz_compare({0.5, 0.5}, AnsatzLayout::DECODER_ONLY, AnsatzOptMode::PER_GAMMA),
                    OutOfRangeError);
}

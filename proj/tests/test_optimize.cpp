// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "adclab/optimize.hpp"
#include "adclab/schemes.hpp"

using namespace adclab;

TEST_CASE("maximize_scalar finds a parabola peak") {
    const auto res = maximize_scalar([](double x) { return -(x - 1.0) * (x - 1.0); }, 0.0, 2.0, 1e-8);
    CHECK(res.converged);
    CHECK(std::abs(res.best_params[0] - 1.0) <= 1e-7);
    CHECK(res.best_value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("maximize_scalar tolerates constant objectives") {
    const auto res = maximize_scalar([](double) { return 3.25; }, -1.0, 1.0, 1e-6);
    CHECK(res.converged);
    CHECK(res.best_value == 3.25);
}

TEST_CASE("maximize_scalar rejects an empty interval") {
    CHECK_THROWS_AS(maximize_scalar([](double x) { return x; }, 1.0, 1.0, 1e-6), OutOfRangeError);
}

TEST_CASE("the single-use encoding peak sits at the Hadamard angle") {
    const double g = 0.830;
    const auto res = maximize_scalar(
        [&](double theta) {
            const auto p = damped_codeword(g, theta, +1);
            const auto m = damped_codeword(g, theta, -1);
            return gain(0.5 + 0.25 * trace_norm(p.matrix() - m.matrix()), classical_success(g, 1));
        },
        0.0, M_PI / 2.0, 1e-6);
    CHECK(std::abs(res.best_params[0] - M_PI / 4.0) <= 1e-3);
    CHECK(res.best_value == doctest::Approx(0.20711).epsilon(1e-3));
}

TEST_CASE("scalar results reproduce exactly at the reported point") {
    auto f = [](double x) { return std::sin(3.0 * x) - 0.2 * x * x; };
    const auto res = maximize_scalar(f, -2.0, 2.0, 1e-7);
    CHECK(f(res.best_params[0]) == res.best_value);
}

TEST_CASE("maximize_simplex solves a quadratic bowl") {
    const auto res = maximize_simplex(
        [](const std::vector<double>& x) {
            const double a = x[0] - 0.3, b = x[1] + 0.2;
            return -(a * a + 2.0 * b * b);
        },
        {0.0, 0.0}, 4, 1e-9, 0);
    CHECK(res.converged);
    CHECK(std::abs(res.best_params[0] - 0.3) <= 1e-6);
    CHECK(std::abs(res.best_params[1] + 0.2) <= 1e-6);
}

TEST_CASE("simplex results reproduce exactly at the reported point") {
    auto f = [](const std::vector<double>& x) { return -std::pow(x[0] - 0.1, 2) + std::cos(x[1]); };
    const auto res = maximize_simplex(f, {0.5, 0.5}, 3, 1e-8, 7);
    CHECK(f(res.best_params) == res.best_value);
}

TEST_CASE("simplex runs are deterministic and monotone in restarts") {
    auto rugged = [](const std::vector<double>& x) {
        return std::sin(5.0 * x[0]) * std::cos(3.0 * x[1]) - 0.1 * (x[0] * x[0] + x[1] * x[1]);
    };
    const auto a = maximize_simplex(rugged, {0.0, 0.0}, 6, 1e-8, 42);
    const auto b = maximize_simplex(rugged, {0.0, 0.0}, 6, 1e-8, 42);
    CHECK(a.best_value == b.best_value);
    REQUIRE(a.best_params.size() == b.best_params.size());
    for (size_t i = 0; i < a.best_params.size(); ++i) CHECK(a.best_params[i] == b.best_params[i]);

    double prev = -1e300;
    for (int r = 1; r <= 6; ++r) {
        const auto res = maximize_simplex(rugged, {0.0, 0.0}, r, 1e-8, 42);
        CHECK(res.best_value >= prev - 1e-12);
        prev = res.best_value;
    }
}

TEST_CASE("simplex matches a brute-force sample on the decoder ansatz") {
    const double g = 0.5;
    auto objective = [&](const std::vector<double>& p) { return ansatz_success(g, AnsatzLayout::DECODER_ONLY, p); };

    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(-M_PI, M_PI);
    double brute = -1.0;
    for (int t = 0; t < 10000; ++t) {
        std::vector<double> p(6);
        for (auto& v : p) v = u(rng);
        brute = std::max(brute, objective(p));
    }

    const auto res = maximize_simplex(objective, std::vector<double>(6, 0.0), 8, 1e-7, 0);
    CHECK(res.best_value >= brute - 1e-3);
}

TEST_CASE("simplex argument checks") {
    auto f = [](const std::vector<double>& x) { return -x[0] * x[0]; };
    CHECK_THROWS_AS(maximize_simplex(f, {}, 4, 1e-8, 0), OutOfRangeError);
    CHECK_THROWS_AS(maximize_simplex(f, {0.0}, 0, 1e-8, 0), OutOfRangeError);
}

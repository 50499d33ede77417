// SPDX-License-Identifier: Apache-2.0

#include "adclab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace adclab {

OptimizerResult maximize_scalar(const std::function<double(double)>& objective, double lo, double hi, double tol) {
    if (!(lo < hi)) throw OutOfRangeError("maximize_scalar: lo must be below hi");

    OptimizerResult res;
    auto eval = [&](double x) {
        ++res.evaluations;
        return objective(x);
    };

    constexpr int kScanPoints = 64;
    double best_x = lo;
    double best_v = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < kScanPoints; ++i) {
        const double x = lo + (hi - lo) * i / (kScanPoints - 1);
        const double v = eval(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
            best_i = i;
        }
    }

    // golden-section inside the bracket around the scan winner
    const double step = (hi - lo) / (kScanPoints - 1);
    double a = std::max(lo, lo + (best_i - 1) * step);
    double b = std::min(hi, lo + (best_i + 1) * step);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = eval(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = eval(x1);
        }
    }
    for (auto [x, v] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }

    res.best_params = {best_x};
    res.best_value = best_v;
    res.converged = true;
    return res;
}

namespace {

double reduce_angle(double t) {
    t = std::remainder(t, 2.0 * M_PI);
    if (t <= -M_PI) t += 2.0 * M_PI;
    return t;
}

struct SimplexPoint {
    std::vector<double> x;
    double f;
};

// single Nelder-Mead run, maximization; returns best vertex
SimplexPoint nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                         const std::vector<double>& start, double tol, int max_evals, int& evals) {
    const size_t n = start.size();
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return objective(x);
    };

    std::vector<SimplexPoint> s(n + 1);
    s[0] = {start, eval(start)};
    for (size_t i = 0; i < n; ++i) {
        std::vector<double> x = start;
        x[i] += (std::abs(x[i]) > 0.1 ? 0.25 * std::abs(x[i]) : 0.25);
        s[i + 1] = {std::move(x), 0.0};
        s[i + 1].f = eval(s[i + 1].x);
    }

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    int local_evals = static_cast<int>(n) + 1;
    while (local_evals < max_evals) {
        std::sort(s.begin(), s.end(), [](const SimplexPoint& a, const SimplexPoint& b) { return a.f > b.f; });

        double diam = 0.0;
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = 0; j < n; ++j) diam = std::max(diam, std::abs(s[i].x[j] - s[0].x[j]));
        if (diam <= tol) break;

        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) centroid[j] += s[i].x[j] / static_cast<double>(n);

        auto blend = [&](const std::vector<double>& from, double c) {
            std::vector<double> x(n);
            for (size_t j = 0; j < n; ++j) x[j] = centroid[j] + c * (from[j] - centroid[j]);
            return x;
        };

        const auto xr = blend(s[n].x, -alpha);
        const double fr = eval(xr);
        ++local_evals;
        if (fr > s[0].f) {
            const auto xe = blend(s[n].x, -gamma);
            const double fe = eval(xe);
            ++local_evals;
            s[n] = (fe > fr) ? SimplexPoint{xe, fe} : SimplexPoint{xr, fr};
        } else if (fr > s[n - 1].f) {
            s[n] = {xr, fr};
        } else {
            const auto xc = blend(s[n].x, rho);
            const double fc = eval(xc);
            ++local_evals;
            if (fc > s[n].f) {
                s[n] = {xc, fc};
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j) s[i].x[j] = s[0].x[j] + sigma * (s[i].x[j] - s[0].x[j]);
                    s[i].f = eval(s[i].x);
                }
                local_evals += static_cast<int>(n);
            }
        }
    }

    std::sort(s.begin(), s.end(), [](const SimplexPoint& a, const SimplexPoint& b) { return a.f > b.f; });
    return s[0];
}

}  // namespace

namespace {

// cyclic golden line searches around the incumbent; deterministic and cheap,
// it shaves the last ~1e-4 the simplex tends to leave behind
SimplexPoint coordinate_polish(const std::function<double(const std::vector<double>&)>& objective, SimplexPoint p,
                               int& evals) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int sweep = 0; sweep < 3; ++sweep) {
        const double radius = 0.3 / (sweep + 1);
        for (size_t j = 0; j < p.x.size(); ++j) {
            double a = p.x[j] - radius, b = p.x[j] + radius;
            auto fj = [&](double t) {
                std::vector<double> x = p.x;
                x[j] = t;
                ++evals;
                return objective(x);
            };
            double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
            double f1 = fj(x1), f2 = fj(x2);
            while (b - a > 1e-8) {
                if (f1 < f2) {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + invphi * (b - a);
                    f2 = fj(x2);
                } else {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - invphi * (b - a);
                    f1 = fj(x1);
                }
            }
            const double xb = (f1 > f2) ? x1 : x2;
            const double fb = std::max(f1, f2);
            if (fb > p.f) {
                p.x[j] = xb;
                p.f = fb;
            }
        }
    }
    return p;
}

}  // namespace

OptimizerResult maximize_simplex(const std::function<double(const std::vector<double>&)>& objective,
                                 const std::vector<double>& x0, int restarts, double tol, unsigned seed) {
    if (x0.empty()) throw OutOfRangeError("maximize_simplex: dimension must be >= 1");
    if (restarts < 1) throw OutOfRangeError("maximize_simplex: restarts must be >= 1");

    OptimizerResult res;
    const int max_evals_per_restart = 400 * static_cast<int>(x0.size()) + 600;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);

    SimplexPoint best{{}, -std::numeric_limits<double>::infinity()};
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> start(x0.size());
        if (r == 0) {
            start = x0;
        } else {
            for (double& v : start) v = angle(rng);
        }
        const SimplexPoint p = nelder_mead(objective, start, tol, max_evals_per_restart, res.evaluations);
        if (p.f > best.f) best = p;
    }
    best = coordinate_polish(objective, std::move(best), res.evaluations);

    for (double& v : best.x) v = reduce_angle(v);
    ++res.evaluations;
    res.best_value = objective(best.x);
    res.best_params = std::move(best.x);
    res.converged = true;
    return res;
}

}  // namespace adclab

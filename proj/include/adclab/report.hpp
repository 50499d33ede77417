// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "adclab/bounds.hpp"
#include "adclab/schemes.hpp"

namespace adclab {

enum class OutputFormat { CSV, JSON };

/// One sweep invocation: which schemes, over which gamma grid, for how many
/// channel uses. threads = 0 picks the hardware concurrency.
struct RunConfig {
    double gamma_start = 0.0;
    double gamma_end = 1.0;
    double gamma_step = 0.005;
    std::vector<SchemeId> schemes;
    int uses = 2;
    int message_bits = 1;
    double tol = 1e-7;
    unsigned seed = 0;
    OutputFormat format = OutputFormat::CSV;
    std::string output_path;  // empty writes to stdout
    int threads = 0;
};

/// Throws OutOfRangeError on an invalid configuration (bad grid, empty
/// scheme set, unsupported uses/message-bits combination).
void validate_config(const RunConfig& config);

/// start, start+step, ..., including end (within half a step).
std::vector<double> make_gamma_grid(double start, double end, double step);

std::vector<SchemeId> parse_scheme_list(const std::string& csv_names);

/// Runs every (gamma, scheme) cell of the config on a worker pool and
/// returns the records sorted by (gamma, scheme name), independent of
/// scheduling.
std::vector<SweepRecord> run_sweep(const RunConfig& config);

/// true when some record reports a non-converged solver.
bool any_not_converged(const std::vector<SweepRecord>& records);

/// Shortest representation at 12 significant digits.
std::string format_double(double v);

std::string params_to_json(const std::map<std::string, double>& params);
std::string records_to_csv(const std::vector<SweepRecord>& records);
std::string records_to_json(const std::vector<SweepRecord>& records);

enum class Figure { FIG1, FIG2, FIG3, APP4 };

/// Writes the per-panel CSV datasets (and optional SVG line charts) for one
/// figure into out_dir; returns the paths written. gamma_step overrides the
/// default 0.005 grid.
std::vector<std::string> write_figure(Figure which, const std::string& out_dir, double gamma_step = 0.005,
                                      bool svg = false, double tol = 1e-7, unsigned seed = 0);

/// delta, L, lambda, epsilon_lower rows of the sphere-packing bound.
std::string bound_csv(int n, int num_messages, const std::vector<double>& deltas);

struct VerifyReport {
    bool passed = false;
    std::string text;
};

/// Checks the four defining basis mappings of V, the completeness of its
/// measurement POVM, and the agreement of the gate realization.
VerifyReport verify_v_circuit();

/// Runs the certified discrimination solver on the even-parity two-bit code
/// states over a gamma grid and reports the worst YKL gap.
VerifyReport verify_povm_certificates(double gamma_step = 0.05, double tol = 1e-7);

/// Exhaustive two-codeword search against the repetition baseline for
/// m = 1..4 over a gamma grid.
VerifyReport verify_classical_optimality_grid(double gamma_step = 0.05);

}  // namespace adclab

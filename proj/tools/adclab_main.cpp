// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "adclab/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitIoError = 4;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw adclab::IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw adclab::IoError("write failed: " + path);
}

int run_sweep_command(const adclab::RunConfig& config_in, const std::string& scheme_csv) {
    adclab::RunConfig config = config_in;
    config.schemes = adclab::parse_scheme_list(scheme_csv);
    adclab::validate_config(config);

    const auto records = adclab::run_sweep(config);
    const std::string payload = config.format == adclab::OutputFormat::CSV ? adclab::records_to_csv(records)
                                                                           : adclab::records_to_json(records);
    write_output(config.output_path, payload);
    return adclab::any_not_converged(records) ? kExitNotConverged : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amplitude damping channel coding schemes: sweeps, figure datasets, bounds and checks"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate schemes over a gamma grid");
    adclab::RunConfig config;
    std::string scheme_csv = "classical,coherent,quantum";
    std::string format_name = "csv";
    sweep->add_option("--gamma-start", config.gamma_start, "grid start")->capture_default_str();
    sweep->add_option("--gamma-end", config.gamma_end, "grid end")->capture_default_str();
    sweep->add_option("--gamma-step", config.gamma_step, "grid step")->capture_default_str();
    sweep->add_option("--schemes", scheme_csv, "comma list: classical,coherent,quantum,circuit")
        ->capture_default_str();
    sweep->add_option("--uses", config.uses, "channel uses per message (one-bit: 1,2,4,8; two-bit: 3)")
        ->capture_default_str();
    sweep->add_option("--message-bits", config.message_bits, "1 or 2")->capture_default_str();
    sweep->add_option("--tol", config.tol, "discrimination solver tolerance")->capture_default_str();
    sweep->add_option("--seed", config.seed, "optimizer seed")->capture_default_str();
    sweep->add_option("--threads", config.threads, "worker threads (0 = hardware)")
        ->envname("ADCLAB_THREADS")
        ->capture_default_str();
    sweep->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--out", config.output_path, "output file (default stdout)");

    // figure
    auto* figure = app.add_subcommand("figure", "write per-panel datasets for one figure");
    std::string which_figure;
    std::string out_dir = ".";
    double figure_step = 0.005;
    bool svg = false;
    double figure_tol = 1e-7;
    unsigned figure_seed = 0;
    figure->add_option("which", which_figure, "fig1, fig2, fig3 or app4")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "app4"}));
    figure->add_option("--out", out_dir, "output directory")->capture_default_str();
    figure->add_option("--gamma-step", figure_step, "grid step")->capture_default_str();
    figure->add_option("--tol", figure_tol, "discrimination solver tolerance")->capture_default_str();
    figure->add_option("--seed", figure_seed, "optimizer seed")->capture_default_str();
    figure->add_flag("--svg", svg, "also write an SVG chart per panel");

    // bound
    auto* bound = app.add_subcommand("bound", "sphere-packing converse table");
    int bound_n = 2, bound_m = 2;
    double delta_start = 0.0, delta_end = 0.5, delta_step = 0.1;
    std::string bound_out;
    bound->add_option("--n", bound_n, "channel uses")->capture_default_str();
    bound->add_option("--messages", bound_m, "number of messages")->capture_default_str();
    bound->add_option("--delta-start", delta_start, "")->capture_default_str();
    bound->add_option("--delta-end", delta_end, "")->capture_default_str();
    bound->add_option("--delta-step", delta_step, "")->capture_default_str();
    bound->add_option("--out", bound_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "self-checks with a human-readable report");
    std::string which_verify;
    verify->add_option("which", which_verify, "v_circuit, povm_cert or classical_opt")
        ->required()
        ->check(CLI::IsMember({"v_circuit", "povm_cert", "classical_opt"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (sweep->parsed()) {
            config.format = format_name == "json" ? adclab::OutputFormat::JSON : adclab::OutputFormat::CSV;
            return run_sweep_command(config, scheme_csv);
        }
        if (figure->parsed()) {
            adclab::Figure f = adclab::Figure::FIG1;
            if (which_figure == "fig2") f = adclab::Figure::FIG2;
            if (which_figure == "fig3") f = adclab::Figure::FIG3;
            if (which_figure == "app4") f = adclab::Figure::APP4;
            const auto files = adclab::write_figure(f, out_dir, figure_step, svg, figure_tol, figure_seed);
            for (const auto& p : files) std::cout << p << "\n";
            return kExitOk;
        }
        if (bound->parsed()) {
            if (delta_step <= 0.0 || delta_end < delta_start) throw adclab::OutOfRangeError("bad delta grid");
            std::vector<double> deltas;
            for (double d = delta_start; d <= delta_end + delta_step * 0.5; d += delta_step)
                deltas.push_back(std::min(d, delta_end));
            write_output(bound_out, adclab::bound_csv(bound_n, bound_m, deltas));
            return kExitOk;
        }
        if (verify->parsed()) {
            adclab::VerifyReport rep;
            if (which_verify == "v_circuit") rep = adclab::verify_v_circuit();
            if (which_verify == "povm_cert") rep = adclab::verify_povm_certificates();
            if (which_verify == "classical_opt") rep = adclab::verify_classical_optimality_grid();
            std::cout << rep.text;
            return rep.passed ? kExitOk : kExitVerifyFailed;
        }
    } catch (const adclab::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}

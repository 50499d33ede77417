// SPDX-License-Identifier: Apache-2.0

#include "adclab/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace adclab {

namespace {

bool is_twobit_scheme_set(const RunConfig& c) { return c.message_bits == 2; }

SweepRecord classical_onebit_record(double gamma, int m) {
    SweepRecord rec;
    rec.gamma = gamma;
    rec.scheme_id = SchemeId::classical;
    rec.uses = m;
    rec.message_bits = 1;
    rec.success_probability = classical_success(gamma, m);
    rec.gain_vs_classical = 0.0;
    return rec;
}

SweepRecord compute_record(SchemeId id, double gamma, const RunConfig& c) {
    if (is_twobit_scheme_set(c)) {
        switch (id) {
            case SchemeId::classical: return classical_twobit(gamma).record;
            case SchemeId::coherent: return coherent_twobit(gamma).record;
            case SchemeId::quantum: return quantum_twobit(gamma, c.tol);
            default: break;
        }
        throw OutOfRangeError("two-bit sweeps support classical, coherent and quantum");
    }
    switch (id) {
        case SchemeId::classical: return classical_onebit_record(gamma, c.uses);
        case SchemeId::coherent: return coherent_onebit(gamma, c.uses);
        case SchemeId::quantum: return quantum_onebit(gamma, c.uses);
        case SchemeId::circuit: return circuit_decoder_onebit(gamma);
        default: break;
    }
    throw OutOfRangeError("one-bit sweeps support classical, coherent, quantum and circuit");
}

}  // namespace

void validate_config(const RunConfig& c) {
    if (!(c.gamma_start >= 0.0 && c.gamma_start < c.gamma_end && c.gamma_end <= 1.0))
        throw OutOfRangeError("gamma range must satisfy 0 <= start < end <= 1");
    if (!(c.gamma_step > 0.0)) throw OutOfRangeError("gamma step must be positive");
    if (c.schemes.empty()) throw OutOfRangeError("scheme set must not be empty");
    if (!(c.tol > 0.0)) throw OutOfRangeError("tol must be positive");
    if (c.threads < 0) throw OutOfRangeError("threads must be non-negative");

    if (c.message_bits == 1) {
        if (c.uses != 1 && c.uses != 2 && c.uses != 4 && c.uses != 8)
            throw OutOfRangeError("one-bit sweeps support uses in {1, 2, 4, 8}");
        for (SchemeId id : c.schemes) {
            if (id == SchemeId::circuit && c.uses != 2)
                throw OutOfRangeError("the circuit decoder uses exactly two channel uses");
            if (id != SchemeId::classical && id != SchemeId::coherent && id != SchemeId::quantum &&
                id != SchemeId::circuit)
                throw OutOfRangeError("unsupported scheme for a one-bit sweep");
        }
    } else if (c.message_bits == 2) {
        if (c.uses != 3) throw OutOfRangeError("two-bit sweeps use exactly three channel uses");
        for (SchemeId id : c.schemes)
            if (id != SchemeId::classical && id != SchemeId::coherent && id != SchemeId::quantum)
                throw OutOfRangeError("unsupported scheme for a two-bit sweep");
    } else {
        throw OutOfRangeError("message_bits must be 1 or 2");
    }
}

std::vector<double> make_gamma_grid(double start, double end, double step) {
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((end - start) / step + 0.5)) + 1;
    for (int i = 0; i < count; ++i) {
        double g = start + i * step;
        if (g > end) g = end;
        grid.push_back(g);
    }
    if (grid.back() < end - step * 0.5) grid.push_back(end);
    return grid;
}

std::vector<SchemeId> parse_scheme_list(const std::string& csv_names) {
    std::vector<SchemeId> out;
    std::stringstream ss(csv_names);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        bool found = false;
        for (SchemeId id : {SchemeId::classical, SchemeId::coherent, SchemeId::quantum, SchemeId::circuit}) {
            if (item == scheme_name(id)) {
                out.push_back(id);
                found = true;
                break;
            }
        }
        if (!found) throw OutOfRangeError("unknown scheme: " + item);
    }
    return out;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config) {
    validate_config(config);
    const std::vector<double> grid = make_gamma_grid(config.gamma_start, config.gamma_end, config.gamma_step);

    // scheme columns in name order so the output ordering is self-evident
    std::vector<SchemeId> schemes = config.schemes;
    std::sort(schemes.begin(), schemes.end(),
              [](SchemeId a, SchemeId b) { return scheme_name(a) < scheme_name(b); });
    schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

    const size_t cells = grid.size() * schemes.size();
    std::vector<SweepRecord> records(cells);

    int threads = config.threads;
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(cells)));

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const size_t cell = next.fetch_add(1);
            if (cell >= cells || failed.load()) break;
            const double gamma = grid[cell / schemes.size()];
            const SchemeId id = schemes[cell % schemes.size()];
            try {
                records[cell] = compute_record(id, gamma, config);
            } catch (const std::exception& e) {
                std::scoped_lock lock(error_mutex);
                failed.store(true);
                if (error_message.empty()) error_message = e.what();
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw OutOfRangeError("sweep failed: " + error_message);
    return records;
}

bool any_not_converged(const std::vector<SweepRecord>& records) {
    for (const auto& r : records) {
        const auto it = r.params.find("converged");
        if (it != r.params.end() && it->second == 0.0) return true;
    }
    return false;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    // normalize the sign of zero so identical values serialize identically
    if (std::string_view(buf) == "-0") return "0";
    return buf;
}

std::string params_to_json(const std::map<std::string, double>& params) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) out += ",";
        first = false;
        out += "\"" + key + "\":" + format_double(value);
    }
    out += "}";
    return out;
}

namespace {

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string record_csv_row(const SweepRecord& r) {
    std::string row;
    row += format_double(r.gamma);
    row += ",";
    row += scheme_name(r.scheme_id);
    row += ",";
    row += std::to_string(r.uses);
    row += ",";
    row += std::to_string(r.message_bits);
    row += ",";
    row += format_double(r.success_probability);
    row += ",";
    row += format_double(r.gain_vs_classical);
    row += ",";
    row += csv_quote(params_to_json(r.params));
    return row;
}

}  // namespace

std::string records_to_csv(const std::vector<SweepRecord>& records) {
    std::string out = "gamma,scheme,uses,message_bits,success_probability,gain_vs_classical,params_json\n";
    for (const auto& r : records) {
        out += record_csv_row(r);
        out += "\n";
    }
    return out;
}

std::string records_to_json(const std::vector<SweepRecord>& records) {
    std::string out = "[\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += "{\"gamma\":" + format_double(r.gamma);
        out += ",\"scheme\":\"" + std::string(scheme_name(r.scheme_id)) + "\"";
        out += ",\"uses\":" + std::to_string(r.uses);
        out += ",\"message_bits\":" + std::to_string(r.message_bits);
        out += ",\"success_probability\":" + format_double(r.success_probability);
        out += ",\"gain_vs_classical\":" + format_double(r.gain_vs_classical);
        out += ",\"params\":" + params_to_json(r.params);
        out += "}";
        if (i + 1 < records.size()) out += ",";
        out += "\n";
    }
    out += "]\n";
    return out;
}

namespace {

struct Series {
    std::string name;
    std::vector<double> values;
};

std::string table_csv(const std::string& xname, const std::vector<double>& xs, const std::vector<Series>& series) {
    std::string out = xname;
    for (const auto& s : series) out += "," + s.name;
    out += "\n";
    for (size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i]);
        for (const auto& s : series) out += "," + format_double(s.values[i]);
        out += "\n";
    }
    return out;
}

// minimal line chart: one polyline per series, no external dependencies
std::string table_svg(const std::string& title, const std::vector<double>& xs, const std::vector<Series>& series) {
    const double w = 640.0, h = 480.0, ml = 60.0, mr = 20.0, mt = 30.0, mb = 40.0;
    double ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (double v : s.values) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double xmin = xs.front(), xmax = xs.back();
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };
    const char* colors[] = {"#2a7d2a", "#1f5fbf", "#c03030", "#8a2aa0", "#c07820", "#20a8a0"};

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    svg << "<text x='" << w / 2 << "' y='18' text-anchor='middle' font-size='14'>" << title << "</text>\n";
    svg << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
        << "' stroke='black'/>\n";
    svg << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb << "' stroke='black'/>\n";
    svg << "<text x='" << ml << "' y='" << h - mb + 16 << "' font-size='11'>" << format_double(xmin) << "</text>\n";
    svg << "<text x='" << w - mr - 20 << "' y='" << h - mb + 16 << "' font-size='11'>" << format_double(xmax)
        << "</text>\n";
    svg << "<text x='4' y='" << py(ymin) << "' font-size='11'>" << format_double(ymin) << "</text>\n";
    svg << "<text x='4' y='" << py(ymax) << "' font-size='11'>" << format_double(ymax) << "</text>\n";
    for (size_t k = 0; k < series.size(); ++k) {
        svg << "<polyline fill='none' stroke='" << colors[k % 6] << "' stroke-width='1.5' points='";
        for (size_t i = 0; i < xs.size(); ++i) svg << px(xs[i]) << "," << py(series[k].values[i]) << " ";
        svg << "'/>\n";
        svg << "<text x='" << w - mr - 150 << "' y='" << mt + 16.0 * (k + 1) << "' font-size='12' fill='"
            << colors[k % 6] << "'>" << series[k].name << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

void emit_panel(std::vector<std::string>& written, const std::string& out_dir, const std::string& stem,
                const std::string& title, const std::vector<double>& xs, const std::vector<Series>& series,
                bool svg) {
    const std::string csv_path = out_dir + "/" + stem + ".csv";
    write_text_file(csv_path, table_csv("gamma", xs, series));
    written.push_back(csv_path);
    if (svg) {
        const std::string svg_path = out_dir + "/" + stem + ".svg";
        write_text_file(svg_path, table_svg(title, xs, series));
        written.push_back(svg_path);
    }
}

}  // namespace

std::vector<std::string> write_figure(Figure which, const std::string& out_dir, double gamma_step, bool svg,
                                      double tol, unsigned seed) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (!std::filesystem::is_directory(out_dir)) throw IoError("not a writable directory: " + out_dir);

    const std::vector<double> grid = make_gamma_grid(0.0, 1.0, gamma_step);
    std::vector<std::string> written;

    if (which == Figure::FIG1) {
        const int uses[4] = {1, 2, 4, 8};
        const char panel_success[4] = {'d', 'e', 'f', 'g'};
        const char panel_gain[4] = {'h', 'i', 'j', 'k'};
        for (int u = 0; u < 4; ++u) {
            const int m = uses[u];
            Series cl{"classical", {}}, co{"coherent", {}}, qu{"quantum", {}};
            Series cog{"coherent_gain", {}}, qug{"quantum_gain", {}};
            for (double g : grid) {
                const auto crec = coherent_onebit(g, m);
                const auto qrec = quantum_onebit(g, m);
                cl.values.push_back(classical_success(g, m));
                co.values.push_back(crec.success_probability);
                qu.values.push_back(qrec.success_probability);
                cog.values.push_back(crec.gain_vs_classical);
                qug.values.push_back(qrec.gain_vs_classical);
            }
            emit_panel(written, out_dir, std::string("fig1_panel_") + panel_success[u],
                       "one-bit success, M=" + std::to_string(m), grid, {cl, co, qu}, svg);
            emit_panel(written, out_dir, std::string("fig1_panel_") + panel_gain[u],
                       "one-bit gain, M=" + std::to_string(m), grid, {cog, qug}, svg);
        }
        return written;
    }

    if (which == Figure::FIG2) {
        Series cl{"classical", {}}, co{"coherent", {}}, ci{"circuit", {}}, qu{"quantum_max", {}};
        Series cog{"coherent_gain", {}}, cig{"circuit_gain", {}}, qug{"quantum_max_gain", {}};
        for (double g : grid) {
            const auto crec = coherent_onebit(g, 2);
            const auto vrec = circuit_decoder_onebit(g);
            const auto qrec = quantum_onebit(g, 2);
            cl.values.push_back(classical_success(g, 2));
            co.values.push_back(crec.success_probability);
            ci.values.push_back(vrec.success_probability);
            qu.values.push_back(qrec.success_probability);
            cog.values.push_back(crec.gain_vs_classical);
            cig.values.push_back(vrec.gain_vs_classical);
            qug.values.push_back(qrec.gain_vs_classical);
        }
        emit_panel(written, out_dir, "fig2_success", "two-qubit schemes", grid, {cl, co, ci, qu}, svg);
        emit_panel(written, out_dir, "fig2_gain", "two-qubit gain over classical", grid, {cog, cig, qug}, svg);
        return written;
    }

    if (which == Figure::FIG3) {
        Series cl{"classical", {}}, co{"coherent", {}}, qu{"quantum", {}};
        Series cog{"coherent_gain", {}}, qug{"quantum_gain", {}};
        for (double g : grid) {
            const auto crec = classical_twobit(g);
            const auto corec = coherent_twobit(g);
            const auto qrec = quantum_twobit(g, tol);
            cl.values.push_back(crec.record.success_probability);
            co.values.push_back(corec.record.success_probability);
            qu.values.push_back(qrec.success_probability);
            cog.values.push_back(corec.record.gain_vs_classical);
            qug.values.push_back(qrec.gain_vs_classical);
        }
        emit_panel(written, out_dir, "fig3_success", "two-bit schemes", grid, {cl, co, qu}, svg);
        emit_panel(written, out_dir, "fig3_gain", "two-bit gain over classical", grid, {cog, qug}, svg);
        return written;
    }

    // APP4: the entangling encoder/decoder comparisons
    Series s1_dec{"decoder_only", {}}, s1_both{"encoder_and_decoder", {}};
    {
        const auto dec = ansatz_compare(grid, AnsatzLayout::DECODER_ONLY, AnsatzOptMode::PER_GAMMA, 8, seed);
        const auto both = ansatz_compare(grid, AnsatzLayout::ENCODER_AND_DECODER, AnsatzOptMode::PER_GAMMA, 8, seed);
        for (const auto& r : dec.records) s1_dec.values.push_back(r.success_probability);
        for (const auto& r : both.records) s1_both.values.push_back(r.success_probability);
    }
    emit_panel(written, out_dir, "app4_s1_per_gamma", "entangling encoder adds nothing", grid, {s1_dec, s1_both},
               svg);

    for (auto mode : {AnsatzOptMode::FIXED_AVERAGE, AnsatzOptMode::PER_GAMMA}) {
        Series enc{"encoder_only_cnot", {}}, dec{"decoder_only_cnot", {}};
        const auto e = ansatz_compare(grid, AnsatzLayout::ENCODER_ONLY_CNOT, mode, 8, seed);
        const auto d = ansatz_compare(grid, AnsatzLayout::DECODER_ONLY_CNOT, mode, 8, seed);
        for (const auto& r : e.records) enc.values.push_back(r.success_probability);
        for (const auto& r : d.records) dec.values.push_back(r.success_probability);
        const bool fixed = mode == AnsatzOptMode::FIXED_AVERAGE;
        emit_panel(written, out_dir, fixed ? "app4_s3_fixed_average" : "app4_s3_per_gamma",
                   fixed ? "one entangling gate, fixed parameters" : "one entangling gate, per-gamma parameters",
                   grid, {enc, dec}, svg);
    }
    return written;
}

std::string bound_csv(int n, int num_messages, const std::vector<double>& deltas) {
    std::string out = "delta,L,lambda,epsilon_lower\n";
    for (double d : deltas) {
        const auto r = sphere_packing(n, num_messages, d);
        out += format_double(d);
        out += "," + std::to_string(r.big_l);
        out += "," + format_double(r.lambda);
        out += "," + format_double(r.epsilon_lower);
        out += "\n";
    }
    return out;
}

VerifyReport verify_v_circuit() {
    std::ostringstream text;
    const ComplexMatrix v = build_v();
    const ComplexMatrix zz = tensor(ComplexMatrix::from_rows({{1, 0}, {0, -1}}),
                                    ComplexMatrix::from_rows({{1, 0}, {0, -1}}));

    const Ket v0 = v0_ket(), v1 = v1_ket();
    struct Case {
        const char* name;
        Ket source;
        int image;
    };
    const Case cases[] = {
        {"V|v0> = |00>", v0, 0},
        {"V|v1> = |01>", v1, 1},
        {"V ZZ|v0> = |11>", apply(zz, v0), 3},
        {"V ZZ|v1> = |10>", apply(zz, v1), 2},
    };

    double worst_infidelity = 0.0;
    for (const auto& c : cases) {
        const double f = fidelity(apply(v, c.source), Ket::basis(4, c.image));
        worst_infidelity = std::max(worst_infidelity, 1.0 - f);
        text << c.name << ": fidelity " << format_double(f) << "\n";
    }

    const double completeness = [&] {
        const Povm povm = measurement_povm(v, 0);
        ComplexMatrix sum(4);
        for (const auto& e : povm.elements()) sum += e;
        return max_abs_diff(sum, ComplexMatrix::identity(4));
    }();
    text << "POVM completeness deviation: " << format_double(completeness) << "\n";

    // gate realization must induce the identical top-qubit measurement
    const Povm from_v = measurement_povm(v, 0);
    const Povm from_circuit = measurement_povm(v_circuit_unitary(), 0);
    const double circuit_dev = std::max(max_abs_diff(from_v.element(0), from_circuit.element(0)),
                                        max_abs_diff(from_v.element(1), from_circuit.element(1)));
    text << "gate-realization measurement deviation: " << format_double(circuit_dev) << "\n";

    VerifyReport rep;
    rep.passed = worst_infidelity <= 1e-10 && completeness <= 1e-10 && circuit_dev <= 1e-10;
    text << "max basis-mapping infidelity: " << format_double(worst_infidelity) << "\n";
    text << (rep.passed ? "PASS" : "FAIL") << " v_circuit\n";
    rep.text = text.str();
    return rep;
}

VerifyReport verify_povm_certificates(double gamma_step, double tol) {
    std::ostringstream text;
    const std::vector<double> grid = make_gamma_grid(0.0, 1.0, gamma_step);
    const std::array<unsigned, 4> even_parity = {0, 3, 5, 6};
    const std::vector<double> priors(4, 0.25);

    double worst_gap = 0.0;
    bool all_converged = true;
    for (double g : grid) {
        const KrausChannel ch = adc_kraus(g);
        std::array<ComplexMatrix, 2> tau;
        for (int b = 0; b < 2; ++b) {
            const double t = M_PI / 4.0 + b * M_PI / 2.0;
            tau[static_cast<size_t>(b)] = apply_channel(
                ch, DensityMatrix::pure(Ket::normalized({std::cos(t), std::sin(t)}))).matrix();
        }
        std::vector<DensityMatrix> states;
        for (unsigned c : even_parity) {
            ComplexMatrix m = tau[(c >> 2) & 1];
            m = tensor(m, tau[(c >> 1) & 1]);
            m = tensor(m, tau[c & 1]);
            states.emplace_back(std::move(m), 3);
        }
        const auto res = optimal_multi(states, priors, tol);
        worst_gap = std::max(worst_gap, res.dual_gap);
        all_converged = all_converged && res.converged;
    }
    text << "even-parity code states, " << grid.size() << " gamma points, max YKL gap: " << format_double(worst_gap)
         << "\n";

    VerifyReport rep;
    rep.passed = all_converged && worst_gap <= tol;
    text << (rep.passed ? "PASS" : "FAIL") << " povm_cert\n";
    rep.text = text.str();
    return rep;
}

VerifyReport verify_classical_optimality_grid(double gamma_step) {
    std::ostringstream text;
    const std::vector<double> grid = make_gamma_grid(0.0, 1.0, gamma_step);
    bool all = true;
    for (int m = 1; m <= 4; ++m) {
        bool ok = true;
        for (double g : grid) ok = ok && verify_classical_optimality(g, m);
        text << "m=" << m << ": repetition optimal at all " << grid.size() << " grid points: " << (ok ? "yes" : "NO")
             << "\n";
        all = all && ok;
    }
    VerifyReport rep;
    rep.passed = all;
    text << (all ? "PASS" : "FAIL") << " classical_opt\n";
    rep.text = text.str();
    return rep;
}

}  // namespace adclab

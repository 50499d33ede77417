// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adclab/bounds.hpp"
#include "adclab/circuits.hpp"
#include "adclab/discrimination.hpp"
#include "adclab/report.hpp"
#include "adclab/schemes.hpp"

namespace py = pybind11;
using namespace adclab;

namespace {

py::array_t<std::complex<double>> to_numpy(const ComplexMatrix& m) {
    py::array_t<std::complex<double>> out(std::vector<py::ssize_t>{m.dim(), m.dim()});
    auto buf = out.mutable_unchecked<2>();
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) buf(r, c) = m(r, c);
    return out;
}

ComplexMatrix from_numpy(const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DimensionMismatchError("expected a square 2-D array");
    ComplexMatrix m(static_cast<int>(a.shape(0)));
    auto buf = a.unchecked<2>();
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) m(r, c) = buf(r, c);
    return m;
}

DensityMatrix state_from_numpy(const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
    const ComplexMatrix m = from_numpy(a);
    int nq = 0;
    while ((1 << nq) < m.dim()) ++nq;
    return DensityMatrix(m, nq);
}

py::dict record_to_dict(const SweepRecord& rec) {
    py::dict d;
    d["gamma"] = rec.gamma;
    d["scheme"] = std::string(scheme_name(rec.scheme_id));
    d["uses"] = rec.uses;
    d["message_bits"] = rec.message_bits;
    d["success_probability"] = rec.success_probability;
    d["gain_vs_classical"] = rec.gain_vs_classical;
    py::dict params;
    for (const auto& [k, v] : rec.params) params[py::str(k)] = v;
    d["params"] = params;
    return d;
}

py::dict discrimination_to_dict(const DiscriminationResult& res) {
    py::dict d;
    d["success_probability"] = res.success_probability;
    d["dual_gap"] = res.dual_gap;
    d["iterations"] = res.iterations;
    d["converged"] = res.converged;
    py::list elements;
    for (const auto& e : res.povm.elements()) elements.append(to_numpy(e));
    d["povm"] = elements;
    return d;
}

}  // namespace

PYBIND11_MODULE(_adclab, m) {
    m.doc() = "coding schemes over the amplitude damping channel: channels, "
              "discrimination solvers, scheme sweeps and converse bounds";

    py::register_exception<OutOfRangeError>(m, "OutOfRangeError", PyExc_ValueError);
    py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", PyExc_ValueError);
    py::register_exception<NotHermitianError>(m, "NotHermitianError", PyExc_ValueError);

    // channels
    m.def("adc_kraus_ops", [](double gamma) {
        const KrausChannel ch = adc_kraus(gamma);
        py::list out;
        for (const auto& e : ch.kraus_ops()) out.append(to_numpy(e));
        return out;
    }, py::arg("gamma"), "Kraus operators [E0, E1] of the amplitude damping channel.");
    m.def("apply_adc", [](double gamma, const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& rho) {
        return to_numpy(apply_channel(adc_kraus(gamma), state_from_numpy(rho)).matrix());
    }, py::arg("gamma"), py::arg("rho"));
    m.def("apply_adc_per_qubit", [](double gamma, const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& rho) {
        return to_numpy(apply_per_qubit(adc_kraus(gamma), state_from_numpy(rho)).matrix());
    }, py::arg("gamma"), py::arg("rho"));
    m.def("z_channel_string_prob", &z_channel_string_prob, py::arg("gamma"), py::arg("sent"), py::arg("received"));

    // matcore essentials
    m.def("trace_norm", [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
        return trace_norm(from_numpy(a));
    }, py::arg("a"));

    // discrimination
    m.def("helstrom", [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a,
                         const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& b) {
        return discrimination_to_dict(helstrom(state_from_numpy(a), state_from_numpy(b)));
    }, py::arg("rho_a"), py::arg("rho_b"));
    m.def("optimal_multi", [](const std::vector<py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>>& states,
                              const std::vector<double>& priors, double tol, int max_iter) {
        std::vector<DensityMatrix> rho;
        rho.reserve(states.size());
        for (const auto& s : states) rho.push_back(state_from_numpy(s));
        return discrimination_to_dict(optimal_multi(rho, priors, tol, max_iter));
    }, py::arg("states"), py::arg("priors"), py::arg("tol") = 1e-7, py::arg("max_iter") = 10000);

    // circuits
    m.def("build_v", [] { return to_numpy(build_v()); });
    m.def("v_circuit_unitary", [] { return to_numpy(v_circuit_unitary()); });

    // schemes
    m.def("classical_success", &classical_success, py::arg("gamma"), py::arg("m"));
    m.def("verify_classical_optimality", &verify_classical_optimality, py::arg("gamma"), py::arg("m"));
    m.def("coherent_onebit", [](double g, int m) { return record_to_dict(coherent_onebit(g, m)); },
          py::arg("gamma"), py::arg("m"));
    m.def("quantum_onebit", [](double g, int m) { return record_to_dict(quantum_onebit(g, m)); },
          py::arg("gamma"), py::arg("m"));
    m.def("circuit_decoder_onebit", [](double g) { return record_to_dict(circuit_decoder_onebit(g)); },
          py::arg("gamma"));
    m.def("alpha_encoder_sweep", [](double g, const std::vector<double>& alphas) {
        const auto res = alpha_encoder_sweep(g, alphas);
        return py::make_tuple(res.best_alpha, res.curve);
    }, py::arg("gamma"), py::arg("alphas"));
    m.def("classical_twobit", [](double g) {
        const auto res = classical_twobit(g);
        py::dict d = record_to_dict(res.record);
        d["codewords"] = res.codebook.codewords;
        d["decode_map"] = res.codebook.decode_map;
        return d;
    }, py::arg("gamma"));
    m.def("coherent_twobit", [](double g) {
        const auto res = coherent_twobit(g);
        py::dict d = record_to_dict(res.record);
        d["codewords"] = res.codebook.codewords;
        d["decode_map"] = res.codebook.decode_map;
        return d;
    }, py::arg("gamma"));
    m.def("quantum_twobit", [](double g, double tol) { return record_to_dict(quantum_twobit(g, tol)); },
          py::arg("gamma"), py::arg("tol") = 1e-7);
    m.def("gain", &gain, py::arg("p"), py::arg("p_classical"));

    // bounds
    m.def("beta", &beta, py::arg("n"), py::arg("ell"));
    m.def("alpha", &alpha, py::arg("n"), py::arg("ell"), py::arg("delta"));
    m.def("sphere_packing", [](int n, int num_messages, double delta) {
        const auto r = sphere_packing(n, num_messages, delta);
        py::dict d;
        d["n"] = r.n;
        d["num_messages"] = r.num_messages;
        d["delta"] = r.delta;
        d["L"] = r.big_l;
        d["lambda"] = r.lambda;
        d["epsilon_lower"] = r.epsilon_lower;
        return d;
    }, py::arg("n"), py::arg("num_messages"), py::arg("delta"));
    m.def("repetition_code_failure", &repetition_code_failure, py::arg("n"), py::arg("delta"));
}

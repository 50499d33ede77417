// SPDX-License-Identifier: Apache-2.0

#include "adclab/channels.hpp"

#include <cmath>

namespace adclab {

namespace {

constexpr double kStructuralTol = 1e-9;

int qubit_count_for_dim(int dim) {
    int n = 0;
    while ((1 << n) < dim) ++n;
    if ((1 << n) != dim) throw DimensionMismatchError("density matrix dimension is not a power of two");
    return n;
}

}  // namespace

KrausChannel::KrausChannel(int input_dim, std::vector<ComplexMatrix> kraus_ops)
    : input_dim_(input_dim), ops_(std::move(kraus_ops)) {
    if (input_dim <= 0) throw OutOfRangeError("channel dimension must be positive");
    if (ops_.empty()) throw OutOfRangeError("channel needs at least one Kraus operator");
    ComplexMatrix sum(input_dim);
    for (const auto& e : ops_) {
        if (e.dim() != input_dim) throw DimensionMismatchError("Kraus operator dimension mismatch");
        if (!e.all_finite()) throw OutOfRangeError("Kraus operator has non-finite entries");
        sum += e.adjoint() * e;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(input_dim)) > kStructuralTol)
        throw OutOfRangeError("Kraus operators do not satisfy completeness");
}

DensityMatrix::DensityMatrix(ComplexMatrix m, int num_qubits) : m_(std::move(m)), num_qubits_(num_qubits) {
    if (num_qubits_ < 0 || m_.dim() != (1 << num_qubits_))
        throw DimensionMismatchError("density matrix dimension must be 2^num_qubits");
    if (!m_.all_finite()) throw OutOfRangeError("density matrix has non-finite entries");
    if (hermiticity_error(m_) > kStructuralTol) throw NotHermitianError("density matrix is not Hermitian");
    if (std::abs(m_.trace() - cplx{1.0, 0.0}) > kStructuralTol)
        throw OutOfRangeError("density matrix trace differs from 1");
}

DensityMatrix DensityMatrix::pure(const Ket& k) {
    return DensityMatrix(k.projector(), qubit_count_for_dim(k.dim()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()), a.num_qubits() + b.num_qubits());
}

KrausChannel adc_kraus(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw OutOfRangeError("gamma must lie in [0, 1]");
    ComplexMatrix e0(2), e1(2);
    e0(0, 0) = 1.0;
    e0(1, 1) = std::sqrt(1.0 - gamma);
    e1(0, 1) = std::sqrt(gamma);
    return KrausChannel(2, {e0, e1});
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
    if (ch.input_dim() != rho.dim()) throw DimensionMismatchError("apply_channel: dimension mismatch");
    ComplexMatrix out(rho.dim());
    for (const auto& e : ch.kraus_ops()) out += e * rho.matrix() * e.adjoint();
    return DensityMatrix(std::move(out), rho.num_qubits());
}

namespace {

// rho' = Σ_i (E_i on qubit q) rho (E_i on qubit q)†, strided in place of an
// explicit embedding. Qubit 0 is the most significant index bit.
ComplexMatrix apply_kraus_to_qubit(const std::vector<ComplexMatrix>& ops, const ComplexMatrix& rho, int qubit,
                                   int num_qubits) {
    const int d = rho.dim();
    const int bit = num_qubits - 1 - qubit;
    const int mask = 1 << bit;

    ComplexMatrix out(d);
    ComplexMatrix tmp(d);
    for (const auto& e : ops) {
        const cplx e00 = e(0, 0), e01 = e(0, 1), e10 = e(1, 0), e11 = e(1, 1);
        // rows: tmp = E rho
        for (int r = 0; r < d; ++r) {
            const int r0 = r & ~mask;
            const int r1 = r0 | mask;
            const bool hi = (r & mask) != 0;
            const cplx a = hi ? e10 : e00;
            const cplx b = hi ? e11 : e01;
            for (int c = 0; c < d; ++c) tmp(r, c) = a * rho(r0, c) + b * rho(r1, c);
        }
        // columns: out += tmp E†
        for (int c = 0; c < d; ++c) {
            const int c0 = c & ~mask;
            const int c1 = c0 | mask;
            const bool hi = (c & mask) != 0;
            const cplx a = std::conj(hi ? e10 : e00);
            const cplx b = std::conj(hi ? e11 : e01);
            for (int r = 0; r < d; ++r) out(r, c) += tmp(r, c0) * a + tmp(r, c1) * b;
        }
    }
    return out;
}

}  // namespace

DensityMatrix apply_per_qubit(const KrausChannel& ch, const DensityMatrix& rho) {
    if (ch.input_dim() != 2) throw DimensionMismatchError("apply_per_qubit: channel must be single-qubit");
    ComplexMatrix m = rho.matrix();
    for (int q = 0; q < rho.num_qubits(); ++q) m = apply_kraus_to_qubit(ch.kraus_ops(), m, q, rho.num_qubits());
    return DensityMatrix(std::move(m), rho.num_qubits());
}

double z_channel_string_prob(double gamma, std::string_view sent, std::string_view received) {
    if (sent.size() != received.size()) throw LengthMismatchError("z_channel_string_prob: length mismatch");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw OutOfRangeError("gamma must lie in [0, 1]");
    double p = 1.0;
    for (size_t k = 0; k < sent.size(); ++k) {
        const char s = sent[k], r = received[k];
        if ((s != '0' && s != '1') || (r != '0' && r != '1'))
            throw OutOfRangeError("bit-strings must consist of '0' and '1'");
        if (s == '0') {
            if (r == '1') return 0.0;
        } else {
            p *= (r == '0') ? gamma : 1.0 - gamma;
        }
    }
    return p;
}

double z_channel_bits_prob(double gamma, unsigned sent, unsigned received, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
        const unsigned m = 1u << k;
        const bool s = (sent & m) != 0, r = (received & m) != 0;
        if (!s) {
            if (r) return 0.0;
        } else {
            p *= r ? 1.0 - gamma : gamma;
        }
    }
    return p;
}

}  // namespace adclab

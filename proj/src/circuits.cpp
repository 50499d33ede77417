// SPDX-License-Identifier: Apache-2.0

#include "adclab/circuits.hpp"

#include <cmath>

namespace adclab {

namespace {

constexpr double kUnitaryTol = 1e-10;

ComplexMatrix mat_h() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

ComplexMatrix mat_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

ComplexMatrix mat_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

ComplexMatrix mat_ry(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return ComplexMatrix::from_rows({{c, -s}, {s, c}});
}

ComplexMatrix mat_phase(double theta) {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::polar(1.0, theta)}});
}

// principal square root: H = P+ - P-, so sqrt(H) = P+ + i P-
ComplexMatrix mat_sqrt_h() {
    const ComplexMatrix h = mat_h();
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix pp = 0.5 * (i2 + h);
    const ComplexMatrix pm = 0.5 * (i2 - h);
    return pp + cplx{0.0, 1.0} * pm;
}

// control on the first listed target, flip/phase the second
ComplexMatrix mat_cnot() {
    return ComplexMatrix::from_rows(
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

ComplexMatrix mat_cz() {
    return ComplexMatrix::from_rows(
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
}

}  // namespace

Gate::Gate(Kind kind, ComplexMatrix u, std::vector<int> targets)
    : kind_(kind), u_(std::move(u)), targets_(std::move(targets)) {
    const size_t arity = u_.dim() == 2 ? 1 : 2;
    if (targets_.size() != arity) throw BadIndexError("gate target count does not match arity");
    if (arity == 2 && targets_[0] == targets_[1]) throw BadIndexError("two-qubit gate needs distinct targets");
    if (unitarity_error(u_) > kUnitaryTol) throw NotUnitaryError("gate matrix is not unitary");
}

Gate Gate::h(int q) { return Gate(Kind::H, mat_h(), {q}); }
Gate Gate::x(int q) { return Gate(Kind::X, mat_x(), {q}); }
Gate Gate::z(int q) { return Gate(Kind::Z, mat_z(), {q}); }
Gate Gate::cnot(int control, int target) { return Gate(Kind::CNOT, mat_cnot(), {control, target}); }
Gate Gate::cz(int a, int b) { return Gate(Kind::CZ, mat_cz(), {a, b}); }
Gate Gate::ry(double theta, int q) { return Gate(Kind::RY, mat_ry(theta), {q}); }
Gate Gate::phase(double theta, int q) { return Gate(Kind::PHASE, mat_phase(theta), {q}); }
Gate Gate::sqrt_h(int q) { return Gate(Kind::SQRT_H, mat_sqrt_h(), {q}); }

Gate Gate::custom(ComplexMatrix u, std::vector<int> targets) {
    if (u.dim() != 2 && u.dim() != 4) throw DimensionMismatchError("custom gates are one- or two-qubit");
    return Gate(Kind::CUSTOM, std::move(u), std::move(targets));
}

namespace {

// u <- (gate embedded at its targets) * u, by index arithmetic on rows.
// Qubit q lives at bit position (n-1-q): qubit 0 is the most significant.
void apply_gate_left(ComplexMatrix& u, const Gate& g, int num_qubits) {
    const int d = u.dim();
    for (int q : g.targets())
        if (q < 0 || q >= num_qubits) throw BadIndexError("gate target outside circuit");

    if (g.targets().size() == 1) {
        const int mask = 1 << (num_qubits - 1 - g.targets()[0]);
        const ComplexMatrix& m = g.matrix();
        for (int r = 0; r < d; ++r) {
            if (r & mask) continue;
            const int r1 = r | mask;
            for (int c = 0; c < d; ++c) {
                const cplx a = u(r, c), b = u(r1, c);
                u(r, c) = m(0, 0) * a + m(0, 1) * b;
                u(r1, c) = m(1, 0) * a + m(1, 1) * b;
            }
        }
        return;
    }

    const int m0 = 1 << (num_qubits - 1 - g.targets()[0]);
    const int m1 = 1 << (num_qubits - 1 - g.targets()[1]);
    const ComplexMatrix& m = g.matrix();
    for (int r = 0; r < d; ++r) {
        if ((r & m0) || (r & m1)) continue;
        const int rows[4] = {r, r | m1, r | m0, r | m0 | m1};
        for (int c = 0; c < d; ++c) {
            cplx v[4];
            for (int i = 0; i < 4; ++i) v[i] = u(rows[i], c);
            for (int i = 0; i < 4; ++i) {
                cplx s = 0.0;
                for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
                u(rows[i], c) = s;
            }
        }
    }
}

}  // namespace

ComplexMatrix circuit_unitary(const Circuit& c) {
    if (c.num_qubits <= 0) throw OutOfRangeError("circuit needs at least one qubit");
    ComplexMatrix u = ComplexMatrix::identity(1 << c.num_qubits);
    for (const Gate& g : c.gates) apply_gate_left(u, g, c.num_qubits);
    return u;
}

Ket v0_ket() {
    const double r = 1.0 / std::sqrt(2.0);
    return Ket::normalized({r, 0.5, 0.5, 0.0});
}

Ket v1_ket() {
    const double r = 1.0 / std::sqrt(2.0);
    return Ket::normalized({0.0, 0.5, -0.5, r});
}

ComplexMatrix build_v() {
    const Ket v0 = v0_ket();
    const Ket v1 = v1_ket();
    const ComplexMatrix zz = tensor(mat_z(), mat_z());
    const Ket w0 = apply(zz, v0);
    const Ket w1 = apply(zz, v1);

    // V = |00><v0| + |01><v1| + |11><w0| + |10><w1|
    ComplexMatrix v(4);
    const Ket* sources[4] = {&v0, &v1, &w1, &w0};  // row index = image basis state
    for (int img = 0; img < 4; ++img)
        for (int c = 0; c < 4; ++c) v(img, c) = std::conj((*sources[img])[c]);
    return v;
}

ComplexMatrix v_circuit_unitary() {
    // top wire: H, CNOT control, Ry(-pi/4); bottom wire: CNOT target, H,
    // Ry(-pi/4). Not equal to build_v() entry by entry (the defining basis
    // mapping fixes phases the circuit realizes differently), but measuring
    // the top qubit after either operator is the identical POVM, which is
    // all the decoder uses. The bottom rotation never reaches the readout.
    Circuit c{2, {Gate::h(0), Gate::cnot(0, 1), Gate::ry(-M_PI / 4.0, 0), Gate::h(1), Gate::ry(-M_PI / 4.0, 1)}};
    return circuit_unitary(c);
}

Povm measurement_povm(const ComplexMatrix& u, int measured_qubit) {
    if (unitarity_error(u) > kUnitaryTol) throw NotUnitaryError("measurement_povm: u is not unitary");
    const int d = u.dim();
    int n = 0;
    while ((1 << n) < d) ++n;
    if ((1 << n) != d) throw DimensionMismatchError("measurement_povm: dimension is not a power of two");
    if (measured_qubit < 0 || measured_qubit >= n) throw BadIndexError("measurement_povm: bad qubit index");

    const int mask = 1 << (n - 1 - measured_qubit);
    std::vector<ComplexMatrix> elems(2, ComplexMatrix(d));
    // M_b = u† (Π_b ⊗ I) u: accumulate rows of u by measured bit
    for (int r = 0; r < d; ++r) {
        ComplexMatrix& m = elems[(r & mask) ? 1 : 0];
        for (int a = 0; a < d; ++a) {
            const cplx ua = std::conj(u(r, a));
            for (int b = 0; b < d; ++b) m(a, b) += ua * u(r, b);
        }
    }
    return Povm(std::move(elems));
}

int ansatz_param_count(AnsatzLayout layout) {
    switch (layout) {
        case AnsatzLayout::ENCODER_AND_DECODER:
            return 8;
        case AnsatzLayout::DECODER_ONLY:
        case AnsatzLayout::ENCODER_ONLY_CNOT:
        case AnsatzLayout::DECODER_ONLY_CNOT:
            return 6;
    }
    throw OutOfRangeError("unknown ansatz layout");
}

namespace {

Circuit local_pair(double t0, double t1) { return Circuit{2, {Gate::ry(t0, 0), Gate::ry(t1, 1)}}; }

Circuit entangling_block(double t0, double t1, double t2, double t3) {
    return Circuit{2, {Gate::ry(t0, 0), Gate::ry(t1, 1), Gate::cnot(0, 1), Gate::ry(t2, 0), Gate::ry(t3, 1)}};
}

}  // namespace

EncoderDecoderPair ansatz_circuit(AnsatzLayout layout, const std::vector<double>& params) {
    if (static_cast<int>(params.size()) != ansatz_param_count(layout))
        throw ParamCountMismatchError("ansatz_circuit: wrong parameter count");
    const std::vector<double>& p = params;
    switch (layout) {
        case AnsatzLayout::DECODER_ONLY:
        case AnsatzLayout::DECODER_ONLY_CNOT:
            return {local_pair(p[0], p[1]), entangling_block(p[2], p[3], p[4], p[5])};
        case AnsatzLayout::ENCODER_AND_DECODER:
            return {entangling_block(p[0], p[1], p[2], p[3]), entangling_block(p[4], p[5], p[6], p[7])};
        case AnsatzLayout::ENCODER_ONLY_CNOT:
            return {entangling_block(p[0], p[1], p[2], p[3]), local_pair(p[4], p[5])};
    }
    throw OutOfRangeError("unknown ansatz layout");
}

}  // namespace adclab

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "adclab/discrimination.hpp"
#include "adclab/matcore.hpp"

namespace adclab {

/// One gate instance. Matrices use the usual conventions: RY(theta) is
/// exp(-i theta Y / 2), PHASE(theta) = diag(1, e^{i theta}), SQRT_H is the
/// principal square root of the Hadamard. Qubit 0 is the top wire and the
/// most significant index bit.
class Gate {
public:
    enum class Kind { H, X, Z, CNOT, CZ, RY, PHASE, SQRT_H, CUSTOM };

    static Gate h(int q);
    static Gate x(int q);
    static Gate z(int q);
    static Gate cnot(int control, int target);
    static Gate cz(int a, int b);
    static Gate ry(double theta, int q);
    static Gate phase(double theta, int q);
    static Gate sqrt_h(int q);
    static Gate custom(ComplexMatrix u, std::vector<int> targets);

    Kind kind() const { return kind_; }
    const std::vector<int>& targets() const { return targets_; }
    const ComplexMatrix& matrix() const { return u_; }

private:
    Gate(Kind kind, ComplexMatrix u, std::vector<int> targets);

    Kind kind_;
    ComplexMatrix u_;
    std::vector<int> targets_;
};

/// Ordered gate list, applied left to right.
struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;
};

/// The full 2^n unitary of a circuit; later gates multiply on the left.
ComplexMatrix circuit_unitary(const Circuit& c);

/// The two-qubit decoding operator V of the near-optimal one-bit decoder,
/// built directly from its defining basis action
///   V|v0> = |00>,  V|v1> = |01>,  V (Z(x)Z)|v0> = |11>,  V (Z(x)Z)|v1> = |10>
/// with |v0> = |00>/sqrt2 + (|01>+|10>)/2 and |v1> = |11>/sqrt2 + (|01>-|10>)/2.
ComplexMatrix build_v();

/// Gate realization of the decoder: H, CNOT and two pi/8 Y-rotations.
/// Induces exactly the same top-qubit measurement as build_v(); the
/// operators themselves differ by phases on the mapped basis, so the basis
/// construction stays the reference.
ComplexMatrix v_circuit_unitary();

/// The decoder vectors |v0>, |v1>.
Ket v0_ket();
Ket v1_ket();

/// Two-element POVM of "apply u, then read qubit `measured_qubit` in Z":
/// M_b = u† (Π_b on that qubit ⊗ I) u.
Povm measurement_povm(const ComplexMatrix& u, int measured_qubit);

/// Two-qubit encoder/decoder ansatz pairs. Every local box is a Y-rotation;
/// an "entangling block" is two rotations, a CNOT(0,1), two rotations.
/// Parameter counts:
///   DECODER_ONLY         6  (2 encoder rotations + 4 decoder block)
///   ENCODER_AND_DECODER  8  (4 encoder block + 4 decoder block)
///   ENCODER_ONLY_CNOT    6  (4 encoder block + 2 decoder rotations)
///   DECODER_ONLY_CNOT    6  (2 encoder rotations + 4 decoder block)
enum class AnsatzLayout { DECODER_ONLY, ENCODER_AND_DECODER, ENCODER_ONLY_CNOT, DECODER_ONLY_CNOT };

int ansatz_param_count(AnsatzLayout layout);

struct EncoderDecoderPair {
    Circuit encoder;
    Circuit decoder;
};

EncoderDecoderPair ansatz_circuit(AnsatzLayout layout, const std::vector<double>& params);

}  // namespace adclab

# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import pytest

import adclab


def test_adc_kraus_ops():
    e0, e1 = adclab.adc_kraus_ops(0.64)
    assert e0[0, 0] == 1.0
    assert e0[1, 1] == pytest.approx(0.6, abs=1e-15)
    assert e1[0, 1] == pytest.approx(0.8, abs=1e-15)
    # completeness
    total = e0.conj().T @ e0 + e1.conj().T @ e1
    assert np.abs(total - np.eye(2)).max() < 1e-12


def test_apply_adc_fixed_point():
    rho = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    out = adclab.apply_adc(1.0, rho)
    assert np.abs(out - np.diag([1.0, 0.0])).max() < 1e-12


def test_trace_norm_and_helstrom():
    g = 0.75
    s = math.sqrt(1 - g)
    rp = 0.5 * np.array([[1 + g, s], [s, 1 - g]], dtype=complex)
    rm = 0.5 * np.array([[1 + g, -s], [-s, 1 - g]], dtype=complex)
    assert adclab.trace_norm(rp - rm) == pytest.approx(1.0, abs=1e-10)

    res = adclab.helstrom(rp, rm)
    assert res["success_probability"] == pytest.approx((1.0 + s) / 2.0, abs=1e-10)
    assert res["dual_gap"] <= 1e-9
    m0, m1 = res["povm"]
    assert np.abs(m0 + m1 - np.eye(2)).max() < 1e-10


def test_optimal_multi_agrees_with_helstrom():
    rng = np.random.default_rng(7)
    for _ in range(3):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        rho_a = a @ a.conj().T
        rho_a /= np.trace(rho_a).real
        rho_b = b @ b.conj().T
        rho_b /= np.trace(rho_b).real
        h = adclab.helstrom(rho_a, rho_b)
        o = adclab.optimal_multi([rho_a, rho_b], [0.5, 0.5])
        assert o["converged"]
        assert o["success_probability"] == pytest.approx(h["success_probability"], abs=1e-6)


def test_classical_and_schemes():
    assert adclab.classical_success(0.9, 2) == pytest.approx(0.595, abs=1e-15)
    assert adclab.verify_classical_optimality(0.5, 2)

    rec = adclab.coherent_onebit(0.830, 1)
    assert rec["gain_vs_classical"] == pytest.approx(0.2071, abs=2e-3)
    assert rec["params"]["theta_enc"] == pytest.approx(math.pi / 4, abs=1e-2)

    circ = adclab.circuit_decoder_onebit(0.0)
    assert circ["success_probability"] == pytest.approx(0.5 + 0.25 * math.sqrt(2), abs=1e-12)


def test_build_v_is_unitary():
    v = adclab.build_v()
    assert np.abs(v @ v.conj().T - np.eye(4)).max() < 1e-10
    # the gate realization measures identically on the top qubit
    vc = adclab.v_circuit_unitary()
    p0 = np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex)
    m0_v = v.conj().T @ p0 @ v
    m0_c = vc.conj().T @ p0 @ vc
    assert np.abs(m0_v - m0_c).max() < 1e-10


def test_twobit_and_bounds():
    cl = adclab.classical_twobit(0.9)
    assert cl["success_probability"] == pytest.approx(0.32725, abs=1e-12)
    assert len(cl["codewords"]) == 4
    assert len(cl["decode_map"]) == 8

    sp = adclab.sphere_packing(2, 2, 0.3)
    assert sp["L"] == 0
    assert sp["lambda"] == pytest.approx(0.5, abs=1e-12)
    assert sp["epsilon_lower"] == pytest.approx(0.3, abs=1e-12)
    assert adclab.repetition_code_failure(2, 0.3) == pytest.approx(0.3, abs=1e-12)

    with pytest.raises(ValueError):
        adclab.classical_success(1.5, 2)

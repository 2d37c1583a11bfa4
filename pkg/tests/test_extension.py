"""Extension steps, model towers, Mobius preprocessing, kernel updates."""

import numpy as np
import pytest

from hbspace.errors import (
    DegenerateOmegaError,
    ForbiddenPhaseError,
    InputFormatError,
)
from hbspace.extension import (
    brownian_shift_symbol,
    build_model,
    extend,
    forbidden_phase,
    kernel_factorization_check,
    mobius_normalize,
    rotate,
)
from hbspace.polynomials import Poly, RationalFn
from hbspace.space import HbSpace

B_ZERO = RationalFn(Poly([]), Poly([1]))
B_HALF = RationalFn(Poly([0.5, 0.5]), Poly([1]))
B_STEP1 = RationalFn(Poly([0, 1]), Poly([2, -1]))
B_STEP2 = RationalFn(Poly([0, 0, 1]), Poly([3, -3, 1]))
B_STEP3 = RationalFn(Poly([0, 3, -6, 5]), Poly([12, -21, 14, -3]))

SAMPLE = 0.8 * np.exp(2j * np.pi * np.arange(9) / 9.0) * np.linspace(0.2, 1, 9)


def same_function(f, g, tol=1e-12):
    return np.max(np.abs(f(SAMPLE) - g(SAMPLE))) < tol


def test_first_step_from_zero():
    step = extend(B_ZERO, omega=1.0, t=np.pi)
    assert abs(step.s - 0.5) < 1e-14
    assert same_function(step.b, B_STEP1)


def test_step_from_zero_any_phase():
    # with b0 = 0 the phase drops out: b = s z / (1 - (1 - s) z)
    step = extend(B_ZERO, omega=2.0, t=1.3)
    s = 0.8
    assert abs(step.s - s) < 1e-14
    want = RationalFn(Poly([0, s]), Poly([1, -(1 - s)]))
    assert same_function(step.b, want)


def test_model_tower_matches_frozen_symbols():
    for n, frozen in ((1, B_STEP1), (2, B_STEP2), (3, B_STEP3)):
        model = build_model(n)
        assert same_function(model.b, frozen, tol=1e-11)
        assert int(model.b.degree) == n


def test_model_s_sequence():
    model = build_model(3)
    assert np.allclose([st.s for st in model.steps], [1 / 2, 1 / 3, 1 / 4], atol=1e-12)


def test_model_certificates():
    model = build_model(3)
    for st in model.steps:
        assert st.certificates["value_at_origin"] < 1e-13
        assert st.certificates["value_at_one"] < 1e-12
        assert st.certificates["derivative_at_one"] < 1e-9


def test_model_norm_chain():
    for n in (1, 2, 3):
        space = HbSpace(build_model(n).b)
        assert abs(space.norm_b_sq - n) < 1e-9


def test_model_verify_isometry_order():
    model = build_model(2, verify=True)
    assert model.isometry_order == 4


def test_forbidden_phase_after_first_step():
    assert forbidden_phase(B_ZERO) is None
    assert abs(forbidden_phase(B_STEP1) - 0.0) < 1e-12
    with pytest.raises(ForbiddenPhaseError):
        extend(B_STEP1, omega=1.0, t=0.0)
    step = extend(B_STEP1, omega=1.0, t=np.pi)
    assert same_function(step.b, B_STEP2)


def test_degenerate_omega():
    with pytest.raises(DegenerateOmegaError):
        extend(B_ZERO, omega=0.0)


def test_extension_needs_vanishing_origin():
    with pytest.raises(InputFormatError):
        extend(B_HALF)


def test_mobius_anchor():
    out = mobius_normalize(B_HALF, 0.5)
    want = RationalFn(Poly([0, 2]), Poly([3, -1]))
    assert same_function(out, want)
    assert abs(out(0)) < 1e-14


def test_mobius_then_extend():
    recentered = mobius_normalize(B_HALF, B_HALF(0))
    step = extend(recentered, omega=1.0, t=np.pi / 2)
    assert int(step.b.degree) == 2
    assert step.certificates["value_at_one"] < 1e-12


def test_mobius_rejects_big_alpha():
    with pytest.raises(InputFormatError):
        mobius_normalize(B_HALF, 1.0)


def test_rotate_moves_boundary_zero():
    phi = np.pi / 2
    rb = rotate(B_STEP1, phi)
    assert np.max(np.abs(rb(SAMPLE) - B_STEP1(np.exp(1j * phi) * SAMPLE))) < 1e-13
    zeros = HbSpace(rb).boundary_zeros
    assert len(zeros) == 1
    lam, mult = zeros[0]
    assert mult == 1
    assert abs(lam - np.exp(-1j * phi)) < 1e-9


def test_brownian_shift_symbol():
    assert same_function(brownian_shift_symbol(1.0), B_STEP1)
    sigma = 0.7
    bb = brownian_shift_symbol(sigma)
    beta = 1 / (1 + sigma**2)
    gamma = sigma**2 / (1 + sigma**2)
    z = 0.3 - 0.4j
    assert abs(bb(z) - gamma * z / (1 - beta * z)) < 1e-14
    with pytest.raises(InputFormatError):
        brownian_shift_symbol(0.0)


def test_brownian_matches_one_step():
    sigma = 1.7
    s = sigma**2 / (1 + sigma**2)
    step = extend(B_ZERO, omega=sigma, t=np.pi)
    assert abs(step.s - s) < 1e-14
    assert same_function(step.b, brownian_shift_symbol(sigma))


def test_kernel_factorization_step_from_zero():
    step = extend(B_ZERO, omega=1.0, t=np.pi)
    out = kernel_factorization_check(B_ZERO, step)
    assert out["max_residual"] < 1e-12


def test_kernel_factorization_later_step():
    step = extend(B_STEP1, omega=1.0, t=np.pi)
    out = kernel_factorization_check(B_STEP1, step)
    assert out["max_residual"] < 1e-12
    step_off = extend(B_STEP1, omega=0.6 + 0.3j, t=2.0)
    out = kernel_factorization_check(B_STEP1, step_off)
    assert out["max_residual"] < 1e-12


def test_extension_json_roundtrippable():
    model = build_model(2)
    blob = model.to_json()
    assert blob["n"] == 2
    assert len(blob["steps"]) == 2
    back = RationalFn.from_json(blob["b"])
    assert same_function(back, B_STEP2, tol=1e-11)

"""Defect forms, isometry orders, and the rank-one shift identity."""

import numpy as np
import pytest

from hbspace.isometry import (
    annihilation_check,
    defect_form,
    isometry_order,
    rank_one_identity_check,
)
from hbspace.polynomials import Poly, RationalFn
from hbspace.space import HbSpace

RNG = np.random.default_rng(411)

B_HALF = RationalFn(Poly([0.5, 0.5]), Poly([1]))
B_AFFINE = RationalFn(Poly([0, 0.5]), Poly([1]))
B_STEP1 = RationalFn(Poly([0, 1]), Poly([2, -1]))
B_STEP2 = RationalFn(Poly([0, 0, 1]), Poly([3, -3, 1]))
B_STEP3 = RationalFn(Poly([0, 3, -6, 5]), Poly([12, -21, 14, -3]))


@pytest.fixture(scope="module")
def spaces():
    return {name: HbSpace(b) for name, b in [
        ("half", B_HALF),
        ("affine", B_AFFINE),
        ("step1", B_STEP1),
        ("step2", B_STEP2),
        ("step3", B_STEP3),
    ]}


def test_defect_form_level_one_anchor(spaces):
    # <beta_1 1, 1> = |z|^2 - |1|^2 = 6 - 2
    assert abs(defect_form(spaces["half"], Poly([1]), Poly([1]), 1) - 4.0) < 1e-12
    # z/2 space: 4/3 - 1
    assert abs(defect_form(spaces["affine"], Poly([1]), Poly([1]), 1) - 1.0 / 3.0) < 1e-12


def test_defect_recursion(spaces):
    space = spaces["step2"]
    f = Poly(RNG.standard_normal(6) + 1j * RNG.standard_normal(6))
    g = Poly(RNG.standard_normal(5) + 1j * RNG.standard_normal(5))
    for m in range(1, 4):
        lhs = defect_form(space, f.shifted(1), g.shifted(1), m) - defect_form(space, f, g, m)
        rhs = defect_form(space, f, g, m + 1)
        assert abs(lhs - rhs) < 1e-10


def test_order_affine_half(spaces):
    rep = isometry_order(spaces["half"])
    assert rep.order == 2
    assert rep.defects[1] < 1e-12
    assert rep.strict_margin > 1.0


def test_order_none_for_z_over_2(spaces):
    rep = isometry_order(spaces["affine"])
    assert rep.order is None
    # the level-m defect stays pinned at 1/3 for every m
    assert all(abs(d - 1.0 / 3.0) < 1e-10 for d in rep.defects)


def test_order_tracks_boundary_multiplicity(spaces):
    assert isometry_order(spaces["step1"]).order == 2
    assert isometry_order(spaces["step2"]).order == 4
    assert isometry_order(spaces["step3"]).order == 6


def test_strict_margins(spaces):
    for name in ("step1", "step2", "step3"):
        rep = isometry_order(spaces[name])
        assert rep.strict_margin > rep.tol_strict


def test_h2_shift_is_isometry():
    rep = isometry_order(HbSpace(RationalFn(Poly([]), Poly([1]))))
    assert rep.order == 1


def test_two_boundary_zeros_not_m_isometric():
    # (z^2 + 1)/2 vanishes in modulus nowhere but |b| = 1 at z = +-i;
    # defects double every level instead of dying
    rep = isometry_order(HbSpace(RationalFn(Poly([0.5, 0, 0.5]), Poly([1]))))
    assert rep.order is None
    assert rep.defects[-1] > rep.defects[2]


def test_rank_one_identity(spaces):
    f = Poly(RNG.standard_normal(6) + 1j * RNG.standard_normal(6))
    g = Poly(RNG.standard_normal(4) + 1j * RNG.standard_normal(4))
    for name in ("half", "affine", "step2"):
        out = rank_one_identity_check(spaces[name], f, g)
        assert out["relative"] < 1e-11


def test_rank_one_identity_anchor(spaces):
    out = rank_one_identity_check(spaces["half"], Poly([1]), Poly([1]))
    assert abs(out["lhs"] - 4.0) < 1e-12
    assert abs(out["rhs"] - 4.0) < 1e-12
    out = rank_one_identity_check(spaces["affine"], Poly([1]), Poly([1]))
    assert abs(out["lhs"] - 1.0 / 3.0) < 1e-12
    assert out["residual"] < 1e-12


def test_annihilation_drop_at_multiplicity(spaces):
    for name, n in (("step1", 1), ("step2", 2), ("step3", 3)):
        res = annihilation_check(spaces[name], 1.0, n + 2)
        assert res[n - 1] > 0.3
        for k in range(n, n + 3):
            assert res[k] < 1e-9


def test_annihilation_first_residual_anchor(spaces):
    res = annihilation_check(spaces["step1"], 1.0, 2)
    assert abs(res[0] - np.sqrt(0.5)) < 1e-10

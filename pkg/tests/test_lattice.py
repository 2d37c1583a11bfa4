"""Invariant subspace classification, cyclicity, membership, distances."""

import numpy as np
import pytest

from hbspace.errors import (
    InputFormatError,
    MultipleBoundaryZeroError,
    PoleInDiskError,
)
from hbspace.lattice import (
    classify,
    is_cyclic,
    ladder_spaces,
    membership,
    subspace_distance,
)
from hbspace.polynomials import Poly, RationalFn
from hbspace.space import HbSpace

B_HALF = RationalFn(Poly([0.5, 0.5]), Poly([1]))
B_STEP2 = RationalFn(Poly([0, 0, 1]), Poly([3, -3, 1]))
B_STEP3 = RationalFn(Poly([0, 3, -6, 5]), Poly([12, -21, 14, -3]))

ZM1 = Poly([-1, 1])  # z - 1


@pytest.fixture(scope="module")
def half():
    return HbSpace(B_HALF)


@pytest.fixture(scope="module")
def step2():
    return HbSpace(B_STEP2)


def test_classify_boundary_factor(half):
    d = classify(half, ZM1)
    assert d.form == "proper"
    assert d.inner_degree == 0
    assert d.boundary_orders[0][1] == 1
    # canonical generator is z - 1 itself (up to normalization)
    zs = np.linspace(-0.7, 0.7, 5)
    assert np.max(np.abs(d.canonical(zs) - (zs - 1))) < 1e-9


def test_classify_caps_at_multiplicity(half, step2):
    sq = ZM1 * ZM1
    assert classify(half, sq).boundary_orders[0][1] == 1
    assert classify(half, ZM1).same_as(classify(half, sq))
    assert classify(step2, sq).boundary_orders[0][1] == 2
    assert not classify(step2, ZM1).same_as(classify(step2, sq))
    cube = sq * ZM1
    assert classify(step2, cube).boundary_orders[0][1] == 2
    assert classify(step2, cube).same_as(classify(step2, sq))


def test_classify_inner_factor(half):
    f = Poly([0, 0.5, 0.5])  # z (z + 1)/2: inner part z
    d = classify(half, f)
    assert d.form == "proper"
    assert d.inner_degree == 1
    assert abs(d.inner_roots[0]) < 1e-10
    assert d.boundary_orders[0][1] == 0


def test_circle_zero_off_the_mate_is_ignored(half):
    # b itself vanishes at -1 on the circle, but -1 is not a mate zero
    d = classify(half, half.b)
    assert d.form == "full"
    assert is_cyclic(half, half.b)


def test_cyclicity_anchors(half):
    assert not is_cyclic(half, Poly([0, 1]))  # z: inner factor
    assert not is_cyclic(half, ZM1)  # boundary vanishing
    assert is_cyclic(half, Poly([1]))
    assert is_cyclic(half, Poly([2, 1]))  # root outside the closed disk


def test_classify_rational_member(half):
    f = RationalFn(Poly([0, 1]), Poly([1, -0.4]))  # z/(1 - 0.4 z)
    d = classify(half, f)
    assert d.inner_degree == 1
    assert abs(d.inner_roots[0]) < 1e-10
    assert d.boundary_orders[0][1] == 0


def test_classify_zero_function(half):
    assert classify(half, Poly([])).form == "zero"


def test_classify_rejects_nonmember(half):
    with pytest.raises(InputFormatError):
        classify(half, RationalFn(Poly([1]), Poly([1, -1])))


def test_membership(half):
    assert membership(half, Poly([3, 1, 2]))
    assert membership(half, RationalFn(Poly([1]), Poly([1, -0.5])))
    assert not membership(half, RationalFn(Poly([1]), Poly([1, -1])))
    with pytest.raises(PoleInDiskError):
        membership(half, RationalFn(Poly([1]), Poly([-0.5, 1])))


def test_membership_reduces_first(half):
    # fake circle pole: (z - 1)/(z - 1) * (1/(1 - z/2))
    num = Poly([-1, 1])
    den = Poly([-1, 1]) * Poly([1, -0.5])
    assert membership(half, RationalFn(num, den, reduce=False))


def test_distance_equal_subspaces(half):
    d = subspace_distance(half, ZM1 * ZM1, ZM1)
    assert d <= 0.1


def test_distance_same_generator(half):
    assert subspace_distance(half, ZM1, ZM1) < 1e-12


def test_distance_invertible_quotient(half):
    d = subspace_distance(half, ZM1 * Poly([2, 1]), ZM1)
    assert d < 1e-6


def test_distance_distinct_subspaces(half, step2):
    assert subspace_distance(half, ZM1, Poly([1])) >= 0.3
    assert subspace_distance(step2, ZM1, ZM1 * ZM1) >= 0.3


def test_distance_zero_cases(half):
    assert subspace_distance(half, Poly([]), Poly([])) == 0.0
    assert subspace_distance(half, Poly([]), ZM1) == 1.0


def test_ladder_step2(step2):
    lad = ladder_spaces(step2)
    assert len(lad) == 3
    assert lad[0].form == "full"
    assert [d.boundary_orders[0][1] for d in lad] == [0, 1, 2]
    for j, d in enumerate(lad):
        again = classify(step2, Poly([-1, 1]) ** j)
        assert d.same_as(again)


def test_ladder_needs_single_zero(half):
    lad = ladder_spaces(half)
    assert len(lad) == 2
    two = HbSpace(RationalFn(Poly([0.5, 0, 0.5]), Poly([1])))  # zeros at +-i
    assert len(two.boundary_zeros) == 2
    with pytest.raises(MultipleBoundaryZeroError):
        ladder_spaces(two)


def test_ladder_chain_is_strictly_nested(step2):
    gens = [Poly([-1, 1]) ** j for j in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            assert subspace_distance(step2, gens[i], gens[j]) >= 0.15


def test_descriptor_json(step2):
    d = classify(step2, Poly([0, -1, 1]))  # z(z-1)
    blob = d.to_json()
    assert blob["form"] == "proper"
    assert blob["boundary_orders"][0]["order"] == 1
    assert len(blob["inner_roots"]) == 1
    assert isinstance(blob["description"], str)

"""Spectral factorization on the unit circle.

The central operation takes a rational b = p/q in the closed unit ball of
H-infinity and produces its outer companion a = r/q with
|a|^2 + |b|^2 = 1 on the circle and a(0) > 0.  The numerator r comes from
factoring the Laurent polynomial |q|^2 - |p|^2: roots off the circle pair
as zeta <-> 1/conj(zeta) and the member outside the closed disk is kept,
while circle roots occur with even multiplicity and are split evenly.

Circle-root clusters shrink like eps^(1/(2m)) for multiplicity m, far
wider than any fixed tolerance once m > 1, so the clustering distance is
chosen adaptively from a ladder and the winner is whichever candidate
actually drives the circle residual below tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import CIRCLE_GRID, DEFAULT_TOLERANCES, Tolerances
from .errors import (
    ExtremeFunctionError,
    FactorizationError,
    NegativeDensityError,
    NotInUnitBallError,
    PoleAtPointError,
    PoleInDiskError,
    ZeroFunctionError,
)
from .polynomials import (
    Poly,
    RationalFn,
    as_rational,
    cluster_points,
    complex_to_json,
    poly_roots,
    polish_multiple_root,
)

_CLUSTER_LADDER = (1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 5e-2)


def circle_grid(n: int = CIRCLE_GRID) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


@dataclass(frozen=True)
class MateResult:
    """Outer companion of b together with its circle zero structure.

    a               the mate, a = r/q with the same denominator as b
    boundary_zeros  [(unit-modulus point, multiplicity), ...] sorted by angle
    residual        max over the circle grid of | |a|^2 + |b|^2 - 1 |
    """

    a: RationalFn
    boundary_zeros: tuple[tuple[complex, int], ...]
    residual: float

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "boundary_zeros": [
                {"lambda": complex_to_json(lam), "mult": m}
                for lam, m in self.boundary_zeros
            ],
            "residual": self.residual,
        }


def _validate_analytic(b: RationalFn) -> None:
    if not b.is_polynomial:
        pole_mod = np.abs(b.poles())
        if np.min(pole_mod) <= 1.0 + 1e-12:
            raise PoleInDiskError(
                f"denominator root at modulus {np.min(pole_mod):.6f} inside the closed disk"
            )


def _laurent_density(b: RationalFn) -> tuple[np.ndarray, int, float]:
    """Coefficients of z^d (|q|^2 - |p|^2), full length 2d + 1, plus a scale."""
    p, q = b.num, b.den
    d = int(max(p.degree if not p.is_zero else 0, q.degree))
    qq = (q * q.reflect(d)).coeff_array(2 * d + 1)
    scale = float(np.max(np.abs(qq)))
    if not p.is_zero:
        pp = (p * p.reflect(d)).coeff_array(2 * d + 1)
        arr = qq - pp
    else:
        arr = qq
    return arr, d, scale


def is_nonextreme(b, tol: Tolerances = DEFAULT_TOLERANCES, grid_n: int = CIRCLE_GRID) -> bool:
    """True iff 1 - |b|^2 is not identically zero on the circle.

    Raises PoleInDiskError for poles in the closed disk and
    NotInUnitBallError when sup |b| on the grid exceeds 1 + 10 * tol.mate.
    """
    b = as_rational(b)
    _validate_analytic(b)
    zs = circle_grid(grid_n)
    vals = np.abs(b(zs))
    if np.max(vals) > 1.0 + 10.0 * tol.mate:
        raise NotInUnitBallError(f"sup |b| on the circle is {np.max(vals):.12f}")
    arr, _, scale = _laurent_density(b)
    return bool(np.max(np.abs(arr)) > 1e-10 * scale)


def _strip_symmetric_zeros(arr: np.ndarray, scale: float) -> np.ndarray:
    k = 0
    while (
        len(arr) - 2 * k > 1
        and abs(arr[k]) <= 1e-12 * scale
        and abs(arr[len(arr) - 1 - k]) <= 1e-12 * scale
    ):
        k += 1
    return arr[k : len(arr) - k]


def _candidate_factor(
    p1: Poly,
    roots: np.ndarray,
    tau: float,
    pair_tol: float,
) -> tuple[Poly, list[tuple[complex, int]]] | None:
    """Try to split the root set at circle window tau; None if inconsistent."""
    mods = np.abs(roots)
    on_circle = np.abs(mods - 1.0) <= tau
    circle_roots = roots[on_circle]
    rest = roots[~on_circle]
    inside = [complex(r) for r in rest[np.abs(rest) < 1.0]]
    outside = [complex(r) for r in rest[np.abs(rest) >= 1.0]]
    if len(inside) != len(outside):
        return None
    # Every inside root must find its reflected partner outside.
    unused = list(outside)
    for r in inside:
        target = 1.0 / r.conjugate()
        dists = [abs(w - target) for w in unused]
        if not dists:
            return None
        j = int(np.argmin(dists))
        if dists[j] > pair_tol * max(1.0, abs(target)):
            return None
        unused.pop(j)

    pairs: list[tuple[complex, int]] = []
    if len(circle_roots):
        for cluster in cluster_points(circle_roots, 3.0 * tau):
            if len(cluster) % 2 != 0:
                return None
            center = complex(np.mean(cluster))
            center = polish_multiple_root(p1, center, len(cluster))
            if abs(center) == 0:
                return None
            center /= abs(center)  # snap onto the circle
            pairs.append((center, len(cluster) // 2))
    factor = Poly([1])
    for w in outside:
        factor = factor * Poly([-w, 1])
    for mu, m in pairs:
        factor = factor * Poly([-mu, 1]) ** m
    return factor, pairs


def pythagorean_mate(
    b,
    tol: Tolerances = DEFAULT_TOLERANCES,
    grid_n: int = CIRCLE_GRID,
    rng: np.random.Generator | None = None,
) -> MateResult:
    """Outer a = r/q with |a|^2 + |b|^2 = 1 on the circle and a(0) > 0.

    Raises ExtremeFunctionError when |b| = 1 a.e., NegativeDensityError when
    |b| exceeds 1 on the grid, and FactorizationError when no clustering on
    the ladder meets the residual tolerance.
    """
    b = as_rational(b)
    if not is_nonextreme(b, tol=tol, grid_n=grid_n):
        raise ExtremeFunctionError("b is an extreme point; no mate exists")
    zs = circle_grid(grid_n)
    qv = b.den(zs)
    pv = b.num(zs)
    density = np.abs(qv) ** 2 - np.abs(pv) ** 2
    qscale = np.max(np.abs(qv)) ** 2
    if np.min(density) < -10.0 * tol.mate * qscale:
        raise NegativeDensityError(
            f"|q|^2 - |p|^2 reaches {np.min(density):.3e} on the circle"
        )

    arr, d, scale = _laurent_density(b)
    sym_gap = np.max(np.abs(arr - np.conj(arr[::-1])))
    if sym_gap > 1e-10 * scale:
        raise FactorizationError(
            f"Laurent coefficients not conjugate-symmetric (gap {sym_gap:.3e})"
        )
    arr = 0.5 * (arr + np.conj(arr[::-1]))  # enforce the symmetry exactly
    p1 = Poly(_strip_symmetric_zeros(arr, scale))

    if p1.degree <= 0:
        roots = np.zeros(0, dtype=complex)
    else:
        roots = poly_roots(p1, tol=tol, rng=rng)

    best: tuple[float, Poly, list[tuple[complex, int]]] | None = None
    for tau in _CLUSTER_LADDER:
        if tau < tol.cluster:
            continue
        cand = _candidate_factor(p1, roots, tau, pair_tol=max(1e-6, tau))
        if cand is None:
            continue
        factor, pairs = cand
        rv = factor(zs)
        mag2 = np.abs(rv) ** 2
        mask = mag2 > 1e-10 * np.max(mag2)
        if not np.any(mask):
            continue
        gamma2 = float(np.median(density[mask] / mag2[mask]))
        if gamma2 <= 0:
            continue
        residual = _circle_residual(factor, gamma2, zs, qv, density)
        if best is None or residual < best[0]:
            best = (residual, factor * np.sqrt(gamma2), pairs)
        if residual <= tol.mate:
            break
    if best is None or best[0] > tol.mate:
        got = "no consistent clustering" if best is None else f"residual {best[0]:.3e}"
        raise FactorizationError(f"mate factorization failed: {got}")
    _, r, pairs = best
    return _finalize(b, r, None, pairs, zs, qv, pv, density)


def _circle_residual(factor: Poly, gamma2: float, zs, qv, density) -> float:
    rv2 = gamma2 * np.abs(factor(zs)) ** 2
    return float(np.max(np.abs(rv2 - density) / np.abs(qv) ** 2))


def _finalize(b, r: Poly, gamma2, pairs, zs, qv, pv, density) -> MateResult:
    if gamma2 is not None:
        r = r * np.sqrt(gamma2)
    a = RationalFn(r, b.den)
    a0 = a(0)
    if abs(a0) == 0:
        raise FactorizationError("mate vanishes at the origin")
    a = RationalFn(a.num * (a0.conjugate() / abs(a0)), a.den)
    av = a(zs)
    bv = pv / qv
    residual = float(np.max(np.abs(np.abs(av) ** 2 + np.abs(bv) ** 2 - 1.0)))
    zeros = tuple(sorted(((lam, m) for lam, m in pairs), key=lambda t: np.angle(t[0])))
    return MateResult(a=a, boundary_zeros=zeros, residual=residual)


def boundary_order(f: RationalFn, lam: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Largest k with f, f', ..., f^(k-1) all vanishing at lam.

    Vanishing is judged on successive synthetic divisions of the numerator,
    with each remainder compared against tol.boundary times the working
    coefficient scale.
    """
    f = as_rational(f)
    if f.num.is_zero:
        raise ZeroFunctionError("the zero function vanishes to every order")
    if abs(f.den(lam)) <= tol.pole * max(1.0, f.den.scale()):
        raise PoleAtPointError(f"denominator vanishes at {lam}")
    work = f.num
    order = 0
    while not work.is_zero:
        value = work(lam)
        level = sum(abs(c) * abs(lam) ** k for k, c in enumerate(work.coeffs))
        if abs(value) > tol.boundary * max(level, 1e-300):
            break
        work, _ = divmod(work, Poly([-lam, 1]))
        order += 1
    return order


def inner_outer(
    f,
    tol: Tolerances = DEFAULT_TOLERANCES,
    rng: np.random.Generator | None = None,
) -> tuple[RationalFn, RationalFn]:
    """Blaschke inner factor over the open-disk zeros, and the outer rest.

    The inner part is prod (z - zeta_i) / (1 - conj(zeta_i) z) over
    numerator roots with |zeta_i| < 1 - tol.boundary; the outer part keeps
    boundary zeros and everything else.
    """
    f = as_rational(f)
    if f.num.is_zero:
        raise ZeroFunctionError("cannot factor the zero function")
    if not f.is_polynomial:
        pole_mod = np.abs(f.poles(tol=tol, rng=rng))
        if np.min(pole_mod) <= 1.0 + 1e-12:
            raise PoleInDiskError("poles must lie outside the closed disk")
    roots = poly_roots(f.num, tol=tol, rng=rng) if f.num.degree >= 1 else np.zeros(0, complex)
    inside = [complex(r) for r in roots if abs(r) < 1.0 - tol.boundary]
    inner_num = Poly([1])
    inner_den = Poly([1])
    deflated = f.num
    for zeta in inside:
        inner_num = inner_num * Poly([-zeta, 1])
        inner_den = inner_den * Poly([1, -zeta.conjugate()])
        deflated, _ = divmod(deflated, Poly([-zeta, 1]))
    inner = RationalFn(inner_num, inner_den)
    outer = RationalFn(deflated * inner_den, f.den)
    return inner, outer

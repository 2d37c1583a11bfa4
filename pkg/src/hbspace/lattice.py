"""Shift-invariant subspaces of H(b) generated by rational members.

For rational nonextreme b the closed shift-invariant subspace [f]
generated by a member f is pinned down by finite data: the Blaschke
factor theta collecting f's zeros in the open disk, and at each
boundary zero lambda_i of the mate (multiplicity m_i) the capped
vanishing order j_i = min(ord_{lambda_i} f, m_i).  Zeros of f elsewhere
on the circle do not matter.  Two members generate the same subspace
exactly when those data agree, and

    canonical(f) = theta(z) * prod_i (z - lambda_i)^(j_i)

is the simplest generator.  [f] is all of H(b) (f is cyclic) when theta
is trivial and every j_i = 0.

subspace_distance gives the numeric side: the gap between the spans of
the first K shift iterates of two generators, measured in the H(b)
inner product.  Equal subspaces show a small gap that decays as K
grows; distinct ones stay separated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import D_TRUNC, DISTANCE_ORBIT
from .errors import (
    InputFormatError,
    MultipleBoundaryZeroError,
    PoleInDiskError,
    RankDeficiencyError,
)
from .factorization import boundary_order
from .polynomials import Poly, RationalFn, as_rational, cluster_points, complex_to_json
from .space import HbSpace

_RANK_TOL = 1e-10

# Roots this close to the circle are suspected shadows of a multiple
# circle zero (an exact multiplicity-m zero splatters numerically by
# roughly eps^(1/m), which reaches 1e-3 around m = 5).
_NEAR_BAND = 1e-3


@dataclass(frozen=True, eq=False)
class SubspaceDescriptor:
    """Classifying data of the invariant subspace [f]."""

    form: str  # "zero" | "full" | "proper"
    inner_roots: tuple[complex, ...]
    boundary_orders: tuple[tuple[complex, int], ...]
    canonical: RationalFn
    description: str

    @property
    def inner_degree(self) -> int:
        return len(self.inner_roots)

    def same_as(self, other: "SubspaceDescriptor", tol: float = 1e-8) -> bool:
        if self.form != other.form:
            return False
        if [j for _, j in self.boundary_orders] != [j for _, j in other.boundary_orders]:
            return False
        if self.inner_degree != other.inner_degree:
            return False
        mine = sorted(self.inner_roots, key=lambda w: (w.real, w.imag))
        theirs = sorted(other.inner_roots, key=lambda w: (w.real, w.imag))
        return all(abs(x - y) <= tol for x, y in zip(mine, theirs))

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "inner_roots": [complex_to_json(w) for w in self.inner_roots],
            "boundary_orders": [
                {"lambda": complex_to_json(lam), "order": j}
                for lam, j in self.boundary_orders
            ],
            "canonical": self.canonical.to_json(),
            "description": self.description,
        }


def membership(space: HbSpace, f) -> bool:
    """Whether the rational function f belongs to H(b).

    For rational nonextreme b that only depends on f: analytic on the
    closed disk means member, a pole on the circle means not, and a pole
    inside the disk is rejected outright (f is not even in H^2).
    """
    f = as_rational(f).reduce(space.tol)
    if f.is_polynomial:
        return True
    radii = np.abs(f.poles())
    if radii.size == 0:
        return True
    closest = float(np.min(radii))
    band = 10.0 * space.tol.boundary
    if closest < 1.0 - band:
        raise PoleInDiskError(f"pole at radius {closest:.6f} inside the disk")
    return closest > 1.0 + band


def _inner_roots(space: HbSpace, f: RationalFn) -> tuple[complex, ...]:
    """Zeros of f strictly inside the disk, with circle shadows removed.

    A multiplicity-m zero sitting exactly on the circle splatters into a
    cluster of m computed roots of radius ~eps^(1/m), some of which land
    inside the disk and would fake an inner factor.  Synthetic-division
    vanishing orders are immune to the splatter, so each near-circle
    cluster is audited against boundary_order at its snapped center and
    that many members are discarded as shadows.
    """
    if f.num.degree < 1:
        return ()
    roots = f.num.roots(space.tol)
    inner = [complex(r) for r in roots if abs(r) < 1.0 - _NEAR_BAND]
    near = np.array([r for r in roots if abs(abs(r) - 1.0) <= _NEAR_BAND])
    if near.size:
        for cluster in cluster_points(near, link=3 * _NEAR_BAND):
            center = complex(np.mean(cluster))
            center /= abs(center)
            for lam, _ in space.boundary_zeros:
                if abs(center - lam) <= 10 * _NEAR_BAND:
                    center = complex(lam)
                    break
            m = boundary_order(f, center, space.tol)
            members = sorted((complex(r) for r in cluster),
                             key=lambda r: abs(r - center))
            inner.extend(r for r in members[m:] if abs(r) < 1.0)
    return tuple(sorted(inner, key=lambda w: (w.real, w.imag)))


def classify(space: HbSpace, f) -> SubspaceDescriptor:
    """The descriptor of [f]; f must be a member of H(b)."""
    f = as_rational(f)
    if f.num.is_zero:
        return SubspaceDescriptor(
            form="zero",
            inner_roots=(),
            boundary_orders=tuple((lam, m) for lam, m in space.boundary_zeros),
            canonical=RationalFn(Poly([]), Poly([1])),
            description="the zero subspace",
        )
    if not membership(space, f):
        raise InputFormatError("not a member of the space: pole on the unit circle")
    f = f.reduce(space.tol)
    inner_roots = _inner_roots(space, f)
    inner_num, inner_den = Poly([1]), Poly([1])
    for zeta in inner_roots:
        inner_num = inner_num * Poly([-zeta, 1])
        inner_den = inner_den * Poly([1, -np.conj(zeta)])
    orders = []
    canonical_poly = Poly([1])
    for lam, mult in space.boundary_zeros:
        j = min(boundary_order(f, lam, space.tol), mult)
        orders.append((lam, j))
        canonical_poly = canonical_poly * Poly([-lam, 1]) ** j
    canonical = RationalFn(canonical_poly * inner_num, inner_den)
    full = not inner_roots and all(j == 0 for _, j in orders)
    if full:
        desc = "the whole space (cyclic generator)"
    else:
        parts = []
        if inner_roots:
            parts.append(f"inner factor of degree {len(inner_roots)}")
        hit = [(lam, j) for lam, j in orders if j > 0]
        if hit:
            txt = ", ".join(f"order {j} at {lam:.6g}" for lam, j in hit)
            parts.append(f"boundary vanishing {txt}")
        desc = "proper subspace: " + "; ".join(parts)
    return SubspaceDescriptor(
        form="full" if full else "proper",
        inner_roots=inner_roots,
        boundary_orders=tuple(orders),
        canonical=canonical,
        description=desc,
    )


def is_cyclic(space: HbSpace, f) -> bool:
    """True when the shift iterates of f span a dense subspace."""
    return classify(space, f).form == "full"


def ladder_spaces(space: HbSpace) -> list[SubspaceDescriptor]:
    """The chain [1] > [(z-lam)] > ... > [(z-lam)^m] for the single
    boundary zero lam of the mate; descriptor j = 0 is the whole space."""
    if len(space.boundary_zeros) != 1:
        raise MultipleBoundaryZeroError(
            f"ladder needs exactly one boundary zero, found {len(space.boundary_zeros)}"
        )
    lam, mult = space.boundary_zeros[0]
    return [classify(space, Poly([-lam, 1]) ** j) for j in range(mult + 1)]


def _orbit_columns(space: HbSpace, f, orbit: int, degree: int, window: int) -> np.ndarray:
    f = as_rational(f)
    base = f.as_poly() if f.is_polynomial else f.taylor_poly(degree)
    cols = np.zeros((window, orbit + 1), dtype=complex)
    for k in range(orbit + 1):
        shifted = base.shifted(k)
        if shifted.degree >= window:
            raise InputFormatError("orbit window too small for the generator degree")
        cols[:, k] = shifted.coeff_array(window)
    return cols


def _orthonormal_range(m: np.ndarray) -> np.ndarray:
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        raise RankDeficiencyError("orbit span collapsed to zero")
    rank = int(np.sum(s > _RANK_TOL * s[0]))
    if rank < m.shape[1]:
        raise RankDeficiencyError(
            f"orbit of {m.shape[1]} iterates has numerical rank {rank}"
        )
    return u[:, :rank]


def subspace_distance(
    space: HbSpace,
    f,
    g,
    orbit: int = DISTANCE_ORBIT,
    degree: int = D_TRUNC,
) -> float:
    """How far apart the invariant subspaces [f] and [g] sit, probed on
    the window {z^k h, k = 0..orbit} in the H(b) metric.

    The statistic is mutual generator approximation: the distance from f
    to the orbit span of g (relative to |f|_b), maximized over both
    directions.  The naive span-to-span gap is useless here, since for
    nested windows the freshest shift iterate always sticks out and the
    gap saturates near 1 even for equal subspaces.  With the mutual
    statistic, equal subspaces decay to zero as the window grows (slowly,
    like 1/sqrt(orbit), when the generators differ by a factor vanishing
    on the circle), while distinct subspaces stay separated.
    """
    f = as_rational(f)
    g = as_rational(g)
    if f.num.is_zero and g.num.is_zero:
        return 0.0
    if f.num.is_zero or g.num.is_zero:
        return 1.0
    fd = int(f.num.degree if f.is_polynomial else degree)
    gd = int(g.num.degree if g.is_polynomial else degree)
    window = orbit + max(fd, gd) + 1
    cf = _orbit_columns(space, f, orbit, degree, window)
    cg = _orbit_columns(space, g, orbit, degree, window)
    gram = space.gram_matrix(window)
    # G = R^H R turns H(b) geometry into plain euclidean columns
    r = np.linalg.cholesky(gram).conj().T
    rf, rg = r @ cf, r @ cg
    qf = _orthonormal_range(rf)
    qg = _orthonormal_range(rg)

    def directed(v: np.ndarray, q: np.ndarray) -> float:
        res = v - q @ (q.conj().T @ v)
        return float(np.linalg.norm(res) / np.linalg.norm(v))

    return max(directed(rf[:, 0], qg), directed(rg[:, 0], qf))

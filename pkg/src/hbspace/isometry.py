"""Higher-order isometry checks for the shift acting on H(b).

The shift S f = z f acts boundedly on H(b) when b is rational and
nonextreme.  Its m-th defect operator is

    beta_m = sum_{k=0}^m (-1)^(m-k) C(m, k) S*^k S^k,

and S is an m-isometry when beta_m = 0.  Everything here works with the
weak form <beta_m f, g>_b, which only needs inner products:

    defect_form(f, g, m) = sum_k (-1)^(m-k) C(m, k) <z^k f, z^k g>_b.

Monomials suffice as probes.  The Gram entries G[j, k] = <z^k, z^j>_b of
a rational symbol satisfy a fixed linear recurrence along diagonals
(their plus companions come from Toeplitz solves against rational Taylor
data), so once the m-th diagonal difference of G vanishes on a window
wider than the recurrence length plus the transient, it vanishes for all
indices.  The default probe window adds a comfortable margin on top of
that length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import D_TRUNC, DEFAULT_TOLERANCES, Tolerances
from .polynomials import Poly
from .space import HbSpace


@dataclass(frozen=True)
class DefectReport:
    """Outcome of an isometry-order search.

    order is the smallest m with max-defect below the iso tolerance, or
    None if no m up to m_max qualifies.  defects[m - 1] is the largest
    probed |<beta_m z^k, z^j>_b|.  strict_margin is the defect one level
    below the found order (large means the order is sharp).
    """

    order: int | None
    defects: tuple[float, ...]
    strict_margin: float | None
    probe_degree: int
    m_max: int
    tol_iso: float
    tol_strict: float

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "defects": list(self.defects),
            "strict_margin": self.strict_margin,
            "probe_degree": self.probe_degree,
            "m_max": self.m_max,
            "tol_iso": self.tol_iso,
            "tol_strict": self.tol_strict,
        }


def defect_form(space: HbSpace, f, g, m: int) -> complex:
    """<beta_m f, g>_b for polynomials f, g; exact Toeplitz arithmetic."""
    u = f if isinstance(f, Poly) else space.vector(f).f
    v = g if isinstance(g, Poly) else space.vector(g).f
    total = 0j
    for k in range(m + 1):
        sign = (-1) ** (m - k) * math.comb(m, k)
        total += sign * space.inner_product(u.shifted(k), v.shifted(k))
    return total


def isometry_order(
    space: HbSpace,
    m_max: int = 8,
    probe_degree: int | None = None,
    tol: Tolerances | None = None,
) -> DefectReport:
    """Search for the smallest m making the shift an m-isometry."""
    tol = tol or space.tol
    if probe_degree is None:
        probe_degree = 2 * space.n + m_max + 8
    size = probe_degree + m_max + 2
    g = space.gram_matrix(size)
    window = probe_degree + 1
    defects = []
    diff = g
    for _ in range(1, m_max + 1):
        diff = diff[1:, 1:] - diff[:-1, :-1]
        defects.append(float(np.max(np.abs(diff[:window, :window]))))
    order = None
    strict = None
    for m in range(1, m_max + 1):
        if defects[m - 1] <= tol.iso:
            order = m
            strict = defects[m - 2] if m >= 2 else float(np.max(np.abs(g[:window, :window])))
            break
    return DefectReport(
        order=order,
        defects=tuple(defects),
        strict_margin=strict,
        probe_degree=probe_degree,
        m_max=m_max,
        tol_iso=tol.iso,
        tol_strict=tol.strict,
    )


def rank_one_identity_check(space: HbSpace, f, g, degree: int | None = None) -> dict:
    """Residual of <zf, zg>_b - <f, g>_b = (1 + |b|_b^2) <f, w>_b <w, g>_b.

    w = sqrt(1 + |b|_b^2) Lb is the defect direction of the shift; the
    identity says beta_1 is the rank-one projection onto it.
    """
    u = space.vector(f)
    v = space.vector(g)
    if degree is None:
        degree = max(D_TRUNC, int(max(u.f.degree, v.f.degree, 0)) + 2)
    lb = space.vector_Lb(degree)
    lhs = space.pair(space.shift(u), space.shift(v)) - space.pair(u, v)
    rhs = (1.0 + space.norm_b_sq) * space.pair(u, lb) * space.pair(lb, v)
    scale = max(1.0, abs(lhs), abs(rhs))
    return {
        "lhs": lhs,
        "rhs": rhs,
        "residual": abs(lhs - rhs),
        "relative": abs(lhs - rhs) / scale,
    }


def annihilation_check(
    space: HbSpace,
    lam: complex,
    k_max: int,
    probe_degree: int = 12,
) -> tuple[float, ...]:
    """residual_k = max_j |<w, (z - conj(lam))^k z^j>_b| for k = 0..k_max.

    When b has a lone boundary zero at lam of multiplicity n, the defect
    direction w pairs to zero against every (z - conj(lam))^k z^j with
    k >= n, and against none below; the drop in the returned sequence
    reads off that multiplicity.
    """
    need = probe_degree + k_max + 2
    w = space.vector_w(degree=max(D_TRUNC, need))
    base = Poly([-np.conj(lam), 1.0])
    out = []
    for k in range(k_max + 1):
        fk = base**k
        worst = 0.0
        for j in range(probe_degree + 1):
            val = space.pair(w, space.vector(fk.shifted(j)))
            worst = max(worst, abs(val))
        out.append(worst)
    return tuple(out)

"""The space H(b) for rational nonextreme b, with exact inner products.

For nonextreme b with mate a, a function f lies in H(b) exactly when
there is an f+ in H^2 with T_conj(a) f+ = T_conj(b) f, and then

    <f, g>_b = <f, g>_H2 + <f+, g+>_H2.

For a polynomial f the companion f+ is again a polynomial of degree at
most deg f, found by back-substitution on an upper-triangular Toeplitz
system built from the Taylor coefficients of a and b.  That makes inner
products of polynomials exact up to rounding.

A handful of rational members have closed-form companions, derived from
the Toeplitz calculus (P denotes the analytic projection):

    b+    = 1/a(0) - a          since T_conj(b) b = 1 - T_conj(a) a
    (Lb)+ = -La                 where L is the backward shift
    K_w+  = conj(b(w)) a k_w    for the reproducing kernel K_w

Vectors built from those forms pair exactly against polynomials because
the H^2 pairing only reads coefficients up to the polynomial's degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import CIRCLE_GRID, D_TRUNC, DEFAULT_TOLERANCES, Tolerances
from .errors import (
    OrderTooHighError,
    SingularSystemError,
    VerificationError,
)
from .factorization import MateResult, is_nonextreme, pythagorean_mate
from .polynomials import Poly, RationalFn, as_rational

_ZP = Poly([0, 1])


@dataclass(frozen=True)
class HbVector:
    """A member of H(b) carried as the pair (f, f+).

    For vectors built from polynomials the pair satisfies the defining
    Toeplitz relation exactly.  Vectors truncated from rational members
    carry geometric tail bounds on the dropped coefficients.
    """

    f: Poly
    f_plus: Poly
    tail_f: float = 0.0
    tail_plus: float = 0.0


def _decay_profile(g: RationalFn, grid: int = 256) -> tuple[float, float]:
    """(M, rho) with |g_k| <= M * rho^(-k); rho = inf for polynomials."""
    pr = g.pole_radius()
    if math.isinf(pr):
        return float(max(g.num.scale(), 1.0)), math.inf
    rho = pr**0.75
    zs = rho * np.exp(2j * np.pi * np.arange(grid) / grid)
    m = 2.0 * float(np.max(np.abs(g.num(zs) / g.den(zs))))
    return m, rho


def degree_for_tail(g: RationalFn, target: float, cap: int = 4096) -> int:
    """Smallest degree D with the coefficient bound below target past D."""
    m, rho = _decay_profile(g)
    if math.isinf(rho):
        return int(max(g.num.degree, 0))
    if m <= target:
        return 0
    need = math.log(m / target) / math.log(rho)
    return min(cap, max(0, math.ceil(need)))


def _tail_bound(g: RationalFn, degree: int) -> float:
    m, rho = _decay_profile(g)
    if math.isinf(rho):
        return 0.0
    # sum_{k > D} |g_k| <= M rho^(-(D+1)) / (1 - 1/rho)
    return m * rho ** (-(degree + 1)) / (1.0 - 1.0 / rho)


class HbSpace:
    """H(b) for a rational nonextreme b in the closed unit ball.

    Members
    -------
    b, a : RationalFn      the symbol and its Pythagorean mate
    n : int                degree of b
    boundary_zeros : tuple of (unit-modulus point, multiplicity)
    norm_b_sq : float      |b|_b^2 = a(0)^(-2) - 1
    norm_Lb_sq : float     |Lb|_b^2 = 1 - |b(0)|^2 - a(0)^2
    """

    def __init__(
        self,
        b,
        tol: Tolerances = DEFAULT_TOLERANCES,
        grid_n: int = CIRCLE_GRID,
        rng: np.random.Generator | None = None,
    ):
        b = as_rational(b)
        # raises the typed validation errors for poles, ball, extremality
        is_nonextreme(b, tol=tol, grid_n=grid_n)
        self.tol = tol
        self.b = b
        self.mate: MateResult = pythagorean_mate(b, tol=tol, grid_n=grid_n, rng=rng)
        self.a = self.mate.a
        self.n = int(max(b.degree, 0))
        self.boundary_zeros = self.mate.boundary_zeros
        a0 = self.a(0)
        if abs(a0) < 1e-15:
            raise SingularSystemError("mate vanishes at the origin")
        self._a0 = float(a0.real)
        self.norm_b_sq = 1.0 / self._a0**2 - 1.0
        b0 = b(0)
        self.norm_Lb_sq = 1.0 - abs(b0) ** 2 - self._a0**2
        self._taylor_a = np.zeros(0, dtype=complex)
        self._taylor_b = np.zeros(0, dtype=complex)
        self._monomial_plus: list[np.ndarray] = []

    # -- Taylor caches -----------------------------------------------------

    def taylor_a(self, n: int) -> np.ndarray:
        if len(self._taylor_a) < n + 1:
            self._taylor_a = self.a.taylor(max(n, 2 * len(self._taylor_a) + 8))
        return self._taylor_a[: n + 1]

    def taylor_b(self, n: int) -> np.ndarray:
        if len(self._taylor_b) < n + 1:
            self._taylor_b = self.b.taylor(max(n, 2 * len(self._taylor_b) + 8))
        return self._taylor_b[: n + 1]

    # -- the plus companion -------------------------------------------------

    def plus_function(self, f: Poly) -> Poly:
        """The unique polynomial f+ with T_conj(a) f+ = T_conj(b) f.

        Solved from the top coefficient down; deg f+ <= deg f.
        """
        if f.is_zero:
            return Poly()
        n = int(f.degree)
        fa = f.coeff_array(n + 1)
        ca = np.conj(self.taylor_a(n))
        cb = np.conj(self.taylor_b(n))
        if abs(ca[0]) < 1e-15:
            raise SingularSystemError("a(0) ~ 0 in back-substitution")
        rhs = np.empty(n + 1, dtype=complex)
        for j in range(n + 1):
            rhs[j] = np.dot(cb[: n + 1 - j], fa[j:])
        out = np.zeros(n + 1, dtype=complex)
        for j in range(n, -1, -1):
            acc = rhs[j]
            if j < n:
                acc -= np.dot(ca[1 : n + 1 - j], out[j + 1 :])
            out[j] = acc / ca[0]
        return Poly(out)

    def plus_residual(self, v: HbVector) -> float:
        """Max residual of the defining relation over represented rows."""
        n = int(max(v.f.degree, v.f_plus.degree, 0))
        fa = v.f.coeff_array(n + 1)
        ga = v.f_plus.coeff_array(n + 1)
        ca = np.conj(self.taylor_a(n))
        cb = np.conj(self.taylor_b(n))
        res = 0.0
        for j in range(n + 1):
            lhs = np.dot(ca[: n + 1 - j], ga[j:])
            rhs = np.dot(cb[: n + 1 - j], fa[j:])
            res = max(res, abs(lhs - rhs))
        return res

    # -- vectors -----------------------------------------------------------

    def vector(self, f) -> HbVector:
        """Exact vector for a polynomial (or polynomial-valued rational)."""
        if isinstance(f, HbVector):
            return f
        if isinstance(f, RationalFn):
            f = f.as_poly()
        elif not isinstance(f, Poly):
            f = Poly([f]) if np.isscalar(f) else Poly(f)
        return HbVector(f=f, f_plus=self.plus_function(f))

    def truncated_vector(self, f: RationalFn, degree: int = D_TRUNC) -> HbVector:
        """Taylor truncation of a rational member, companion by solve.

        The companion inherits an O(tail) error at every index from the
        dropped coefficients, so this is for coarse geometry (subspace
        angles), not for certified identities.
        """
        ft = f.taylor_poly(degree)
        return HbVector(
            f=ft,
            f_plus=self.plus_function(ft),
            tail_f=_tail_bound(f, degree),
            tail_plus=0.0,
        )

    def vector_b(self, degree: int = D_TRUNC) -> HbVector:
        """b itself: b+ = 1/a(0) - a."""
        bp = RationalFn(self.a.den * (1.0 / self._a0) - self.a.num, self.a.den)
        return self._rational_pair(self.b, bp, degree)

    def vector_Lb(self, degree: int = D_TRUNC) -> HbVector:
        """Lb = (b - b(0))/z: companion -La."""
        return self._rational_pair(
            _backward_rational(self.b), -_backward_rational(self.a), degree
        )

    def vector_w(self, degree: int = D_TRUNC) -> HbVector:
        """The defect vector w = sqrt(1 + |b|_b^2) Lb = Lb / a(0)."""
        u = self.vector_Lb(degree)
        c = 1.0 / self._a0
        return HbVector(u.f * c, u.f_plus * c, u.tail_f * c, u.tail_plus * c)

    def _rational_pair(self, g: RationalFn, gplus: RationalFn, degree: int) -> HbVector:
        return HbVector(
            f=g.taylor_poly(degree),
            f_plus=gplus.taylor_poly(degree),
            tail_f=_tail_bound(g, degree),
            tail_plus=_tail_bound(gplus, degree),
        )

    # -- inner products ------------------------------------------------------

    def pair(self, u: HbVector, v: HbVector) -> complex:
        """<u, v>_b, linear in u and conjugate-linear in v."""
        return _h2_dot(u.f, v.f) + _h2_dot(u.f_plus, v.f_plus)

    def inner_product(self, f, g) -> complex:
        u = f if isinstance(f, HbVector) else self.vector(f)
        v = g if isinstance(g, HbVector) else self.vector(g)
        return self.pair(u, v)

    def norm_sq(self, f) -> float:
        return float(self.inner_product(f, f).real)

    def gram_matrix(self, n: int) -> np.ndarray:
        """n x n matrix with entry (j, k) = <z^k, z^j>_b; Hermitian PSD."""
        plus = self._monomial_plus_list(n - 1)
        m = np.zeros((n, n), dtype=complex)
        for k in range(n):
            pk = plus[k]
            m[: len(pk), k] = pk
        return np.eye(n, dtype=complex) + m.conj().T @ m

    def _monomial_plus_list(self, max_deg: int) -> list[np.ndarray]:
        while len(self._monomial_plus) <= max_deg:
            k = len(self._monomial_plus)
            pk = self.plus_function(Poly([0] * k + [1]))
            self._monomial_plus.append(pk.coeff_array(k + 1))
        return self._monomial_plus[: max_deg + 1]

    # -- shifts ------------------------------------------------------------

    def shift(self, f) -> HbVector:
        """Multiplication by z, companion recomputed exactly."""
        u = f if isinstance(f, HbVector) else self.vector(f)
        return self.vector(u.f.shifted(1))

    def backward_shift(self, f) -> HbVector:
        """L f = (f - f(0))/z."""
        u = f if isinstance(f, HbVector) else self.vector(f)
        return self.vector(Poly(u.f.coeffs[1:]))

    # -- reproducing kernels ---------------------------------------------------

    def kernel(self, lam: complex, z: complex) -> complex:
        """K_lam(z) = (1 - conj(b(lam)) b(z)) / (1 - conj(lam) z)."""
        c = self.b(lam).conjugate()
        num = 1.0 - c * self.b(z)
        den = 1.0 - lam.conjugate() * z
        if abs(den) < 1e-15:
            kf = self.kernel_fn(lam)
            return kf(z)
        return num / den

    def kernel_fn(self, lam: complex) -> RationalFn:
        """K_lam as a rational function of z (reduced at boundary points)."""
        return self.kernel_derivative(lam, 0)

    def kernel_derivative(self, w: complex, i: int) -> RationalFn:
        """d^i/d(conj(w))^i K_w as a rational function of z.

        Interior w: defined for every i.  Boundary w: w must be a mate
        boundary zero of multiplicity m and i <= m - 1, in which case the
        circle pole cancels and the result is analytic on the closed disk.
        """
        num, den_extra = self._kernel_derivative_parts(w, i, plus_part=False)
        return self._assemble_kernel_fn(num, den_extra, w, i)

    def kernel_vector(self, lam: complex, degree: int = D_TRUNC) -> HbVector:
        """Truncated kernel with its exact companion conj(b(lam)) a k_lam."""
        return self.derivative_kernel_vector(lam, 0, degree=degree)

    def derivative_kernel_vector(self, w: complex, i: int, degree: int = D_TRUNC) -> HbVector:
        u = self.kernel_derivative(w, i)
        unum, den_extra = self._kernel_derivative_parts(w, i, plus_part=True)
        uplus = self._assemble_kernel_fn(unum, den_extra, w, i)
        return self._rational_pair(u, uplus, degree)

    def _boundary_multiplicity(self, w: complex) -> int | None:
        """Multiplicity if w sits at a mate boundary zero, else None."""
        if abs(abs(w) - 1.0) > 10.0 * self.tol.boundary:
            return None
        for lam, m in self.boundary_zeros:
            if abs(w - lam) <= 1e-6:
                return m
        return 0

    def _kernel_derivative_parts(self, w: complex, i: int, plus_part: bool):
        """Numerator over q(z) (1 - conj(w) z)^(i+1) for u_w^i or its companion."""
        mult = self._boundary_multiplicity(w)
        if mult is not None and i >= mult:
            raise OrderTooHighError(
                f"derivative order {i} at boundary point {w} exceeds multiplicity {mult}"
            )
        wbar = w.conjugate()
        pole = Poly([1, -wbar])  # 1 - conj(w) z
        g = self.b
        cj = []
        for _ in range(i + 1):
            cj.append(g(w).conjugate())
            g = g.derivative()
        acc = Poly()
        for j in range(i + 1):
            coef = math.comb(i, j) * math.factorial(i - j) * cj[j]
            acc = acc + coef * (pole**j).shifted(i - j)
        if plus_part:
            num = self.a.num * acc
        else:
            num = math.factorial(i) * self.b.den.shifted(i) - self.b.num * acc
        return num, pole ** (i + 1)

    def _assemble_kernel_fn(self, num: Poly, den_extra: Poly, w: complex, i: int) -> RationalFn:
        if abs(abs(w) - 1.0) > 10.0 * self.tol.boundary:
            return RationalFn(num, self.b.den * den_extra)
        # on the circle 1 - conj(w) z = -conj(w) (z - w): cancel (z - w)^(i+1)
        factor = Poly([-w, 1])
        scale = (-w.conjugate()) ** (i + 1)
        work = num
        for _ in range(i + 1):
            work, rem = divmod(work, factor)
            if rem.scale() > 1e-7 * max(num.scale(), 1.0):
                raise VerificationError(
                    f"boundary kernel cancellation left remainder {rem.scale():.3e}"
                )
        return RationalFn(work * (1.0 / scale), self.b.den)

    # -- identities ----------------------------------------------------------

    def norm_identities_check(self, degree: int | None = None) -> dict:
        """Closed forms for |b|_b^2 and |Lb|_b^2 against Gram arithmetic."""
        report: dict = {}
        if self.b.is_polynomial:
            bb = self.norm_sq(self.b.as_poly())
            lb = self.norm_sq(Poly(self.b.as_poly().coeffs[1:]))
            trunc = {"mode": "exact"}
        else:
            if degree is None:
                degree = max(
                    D_TRUNC,
                    degree_for_tail(self.b, 1e-16),
                    degree_for_tail(self.a, 1e-16),
                )
            vb = self.vector_b(degree)
            vl = self.vector_Lb(degree)
            bb = float(self.pair(vb, vb).real)
            lb = float(self.pair(vl, vl).real)
            trunc = {
                "mode": "taylor",
                "degree": degree,
                "tail_bound": max(vb.tail_f, vb.tail_plus, vl.tail_f, vl.tail_plus),
            }
        report["norm_b_sq"] = {
            "closed": self.norm_b_sq,
            "gram": bb,
            "diff": abs(self.norm_b_sq - bb),
        }
        report["norm_Lb_sq"] = {
            "closed": self.norm_Lb_sq,
            "gram": lb,
            "diff": abs(self.norm_Lb_sq - lb),
        }
        report["truncation"] = trunc
        report["tolerance"] = self.tol.gram
        report["ok"] = bool(
            report["norm_b_sq"]["diff"] <= self.tol.gram
            and report["norm_Lb_sq"]["diff"] <= self.tol.gram
        )
        return report

    def __repr__(self):
        return f"HbSpace(b={self.b!r}, n={self.n})"


def _h2_dot(f: Poly, g: Poly) -> complex:
    n = min(len(f.coeffs), len(g.coeffs))
    if n == 0:
        return 0j
    return complex(np.dot(f.coeff_array(n), np.conj(g.coeff_array(n))))


def _backward_rational(g: RationalFn) -> RationalFn:
    """(g - g(0))/z for rational g analytic at the origin."""
    g0 = g(0)
    num = g.num - g0 * g.den
    # num vanishes at 0 by construction; divide out z exactly
    shifted = Poly(num.coeffs[1:]) if not num.is_zero else Poly()
    return RationalFn(shifted, g.den)

"""Tolerance and truncation knobs shared across the package.

Every tolerance has a single home here so reports can carry the exact
values that were in force.  Instances are immutable; use ``replace`` to
derive a variant.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

DEFAULT_SEED = 0
SEED_ENV_VAR = "HB_SEED"

# Default truncation degree for Taylor representations of rational members.
D_TRUNC = 64

# Circle grid used for sup-norm style residuals.
CIRCLE_GRID = 1024

# Probe depth for annihilation and defect scans.
ORACLE_K = 12

# Shift-orbit length for subspace distances.  Generators of the same
# subspace that differ by a factor vanishing on the circle approximate
# each other only at a 1/sqrt(orbit) rate, so the window must be long
# enough to pull equal subspaces visibly below the distinctness gap.
DISTANCE_ORBIT = 128


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds, named after the role they play.

    root_residual       acceptance residual for polynomial root finding
    gcd                 root matching distance in gcd / reduction
    pole                guard distance for evaluating near a pole
    mate                residual for |a|^2 + |b|^2 = 1 on the circle grid
    boundary            vanishing threshold for boundary derivative orders
    phase               forbidden-phase detection window
    iso                 defect-form residual that counts as "annihilated"
    strict              lower bound certifying a defect form is not zero
    gram                agreement between closed forms and Gram arithmetic
    cluster             base distance for greedy root clustering
    """

    root_residual: float = 1e-11
    gcd: float = 1e-9
    pole: float = 1e-13
    mate: float = 1e-9
    boundary: float = 1e-7
    phase: float = 1e-8
    iso: float = 1e-8
    strict: float = 1e-3
    gram: float = 1e-8
    cluster: float = 1e-7

    def replace(self, **kwargs) -> "Tolerances":
        return dataclasses.replace(self, **kwargs)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULT_TOLERANCES = Tolerances()


def resolve_seed(cli_seed: int | None = None) -> int:
    """Seed precedence: HB_SEED environment variable, CLI flag, default."""
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from exc
    if cli_seed is not None:
        return cli_seed
    return DEFAULT_SEED

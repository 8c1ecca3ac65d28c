"""Runtime checks of Habsieger's congruences for n divisible by 6.

For every dominating set D of Q_n with 6 | n:

    delta(N[v]) is odd when v is not in D and even when v is in D,
    delta(N_1[v]) + delta(N_2[v]) is divisible by 3.

The sums are taken over the per-vertex excess already stored in an
ExcessProfile, so a violation points at the excess pipeline (or at a
corrupted profile), never at a legitimate dominating set.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cube import sphere_sum
from .domination import DominatingSet, ExcessProfile, excess_profile


class NotApplicableError(ValueError):
    """Raised when a check's dimension precondition does not hold."""


def require_mod6(n: int, what: str) -> None:
    if n % 6:
        raise NotApplicableError(f"{what} requires n divisible by 6 (got n={n})")


@dataclass
class CongruenceReport:
    dim: int
    parity_violations: list[tuple[int, int]] = field(default_factory=list)
    mod3_violations: list[tuple[int, int]] = field(default_factory=list)
    vertices_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.parity_violations and not self.mod3_violations


def _profile_for(D: DominatingSet, profile: ExcessProfile | None) -> ExcessProfile:
    if profile is None:
        return excess_profile(D)
    if profile.n != D.n:
        raise ValueError("profile dimension does not match the dominating set")
    return profile


def neighborhood_excess(profile: ExcessProfile) -> np.ndarray:
    """delta(N[v]) for every v."""
    return profile.per_vertex + sphere_sum(profile.per_vertex, profile.n, 1)


def check_parity(D: DominatingSet, profile: ExcessProfile | None = None) -> CongruenceReport:
    require_mod6(D.n, "parity congruence")
    profile = _profile_for(D, profile)
    closed = neighborhood_excess(profile)
    expected = np.where(D.members.bits, 0, 1)
    bad = np.flatnonzero(closed % 2 != expected)
    return CongruenceReport(
        D.n,
        parity_violations=[(int(v), int(closed[v])) for v in bad],
        vertices_checked=1 << D.n,
    )


def check_mod3(D: DominatingSet, profile: ExcessProfile | None = None) -> CongruenceReport:
    require_mod6(D.n, "mod-3 congruence")
    profile = _profile_for(D, profile)
    ring = sphere_sum(profile.per_vertex, D.n, 1) + sphere_sum(profile.per_vertex, D.n, 2)
    bad = np.flatnonzero(ring % 3 != 0)
    return CongruenceReport(
        D.n,
        mod3_violations=[(int(v), int(ring[v])) for v in bad],
        vertices_checked=1 << D.n,
    )


def check_congruences(D: DominatingSet, profile: ExcessProfile | None = None) -> CongruenceReport:
    profile = _profile_for(D, profile)
    par = check_parity(D, profile)
    mod3 = check_mod3(D, profile)
    return CongruenceReport(D.n, par.parity_violations, mod3.mod3_violations, 1 << D.n)

"""Dominating sets and their excess."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cube import VertexSet, check_vertex, neighborhood_cover


class NotDominatingError(ValueError):
    pass


def is_dominating(S: VertexSet) -> bool:
    return bool(np.all(neighborhood_cover(S.bits, S.n) > 0))


@dataclass(frozen=True)
class DominatingSet:
    """A vertex set D with N[D] = V(Q_n); checked when constructed."""

    members: VertexSet

    def __post_init__(self):
        if not is_dominating(self.members):
            cover = neighborhood_cover(self.members.bits, self.members.n)
            missing = int(np.flatnonzero(cover == 0)[0])
            raise NotDominatingError(
                f"set of size {len(self.members)} does not dominate Q_{self.n}; "
                f"vertex mask {missing} is undominated"
            )

    @classmethod
    def from_masks(cls, n: int, masks) -> "DominatingSet":
        return cls(VertexSet.from_masks(n, masks))

    @property
    def n(self) -> int:
        return self.members.n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members


@dataclass(frozen=True)
class ExcessProfile:
    n: int
    size: int  # |D|
    per_vertex: np.ndarray = field(repr=False)  # delta_v for every vertex
    histogram: tuple[int, ...]  # histogram[x] = |V_delta^x|, x = 0..n
    total: int  # delta over the whole cube

    def count(self, x: int) -> int:
        return self.histogram[x] if 0 <= x <= self.n else 0


def excess_array(D: DominatingSet) -> np.ndarray:
    return neighborhood_cover(D.members.bits, D.n) - 1


def excess_of_vertex(v, D: DominatingSet) -> int:
    m = check_vertex(int(v), D.n)
    bits = D.members.bits
    return int(bits[m]) + sum(int(bits[m ^ (1 << b)]) for b in range(D.n)) - 1


def excess_of_set(S: VertexSet, D: DominatingSet) -> int:
    if S.n != D.n:
        raise ValueError("dimension mismatch")
    return int(excess_array(D)[S.bits].sum())


def excess_profile(D: DominatingSet) -> ExcessProfile:
    delta = excess_array(D)
    delta.flags.writeable = False
    hist = np.bincount(delta, minlength=D.n + 1)
    total = int(delta.sum())
    # total excess identity: each member of D covers n+1 vertices
    assert total == (D.n + 1) * len(D) - (1 << D.n)
    return ExcessProfile(D.n, len(D), delta, tuple(int(h) for h in hist), total)


def excess_identity(n: int, size: int) -> int:
    return (n + 1) * size - (1 << n)


def c_set(profile: ExcessProfile) -> VertexSet:
    """C(D): vertices whose excess is at least 2."""
    return VertexSet(profile.n, profile.per_vertex >= 2)

"""Surfeit of a dominating set and empirical checkers for the lemmas built on it.

For v outside D the surfeit contribution is s(v) = delta(N[v]) - 1, and
V_zeta^x collects the outside vertices with s(v) = x.  The total surfeit over
the cube can be counted two ways (``zeta_m1`` from the excess histogram,
``zeta_m2`` from the surfeit histogram); on a genuine dominating set the two
agree.

The lemma checkers below take a concrete dominating set and test each lemma
statement vertex by vertex.  They are meant to come back empty; each result
also carries how many hypotheses were actually instantiated, so an empty
violation list can be told apart from a vacuous one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .congruence import NotApplicableError, require_mod6
from .cube import (
    VertexSet,
    closed_neighborhood_sum,
    distance_to_set,
    sphere_masks,
    sphere_sum,
)
from .domination import DominatingSet, ExcessProfile, excess_profile


@dataclass(frozen=True)
class SurfeitProfile:
    n: int
    outside: np.ndarray = field(repr=False)  # membership of V(Q_n) \ D
    s_values: np.ndarray = field(repr=False)  # delta(N[v]) - 1, meaningful where outside
    histogram: dict[int, int]  # s -> number of outside vertices with that s

    @property
    def per_vertex_s(self) -> dict[int, int]:
        return {int(v): int(self.s_values[v]) for v in np.flatnonzero(self.outside)}

    def count(self, s: int) -> int:
        return self.histogram.get(s, 0)

    def total(self) -> int:
        return sum(s * c for s, c in self.histogram.items())


@dataclass(frozen=True)
class SurfeitReport:
    delta_total: int
    zeta_total: int
    zeta_m1: int
    zeta_m2: int
    zeta_max: int


def surfeit_profile(D: DominatingSet, profile: ExcessProfile | None = None) -> SurfeitProfile:
    profile = profile or excess_profile(D)
    delta = profile.per_vertex
    s = delta + sphere_sum(delta, D.n, 1) - 1
    outside = ~D.members.bits
    values, counts = np.unique(s[outside], return_counts=True)
    hist = {int(v): int(c) for v, c in zip(values, counts)}
    outside.flags.writeable = False
    s.flags.writeable = False
    return SurfeitProfile(D.n, outside, s, hist)


def surfeit_of_set(S: VertexSet, D: DominatingSet) -> int:
    sp = surfeit_profile(D)
    return int(sp.s_values[S.bits & sp.outside].sum())


def zeta_m1(profile: ExcessProfile) -> int:
    """Total surfeit counted through the excess histogram."""
    n = profile.n
    pairs = sum(x * (x - 1) * c for x, c in enumerate(profile.histogram))
    return (n - 1) * profile.total - (1 << n) + profile.size - pairs


def zeta_max(profile: ExcessProfile) -> int:
    """The value zeta_m1 would take if no vertex had excess 2 or more."""
    return (profile.n - 1) * profile.total - (1 << profile.n) + profile.size


def zeta_m2(sprofile: SurfeitProfile) -> int:
    """Total surfeit counted through the surfeit classes.

    For n divisible by 6 the odd classes are empty, and the sum runs over the
    even classes only.  Otherwise it is the plain weighted sum, which may pick
    up s = -1 from outside vertices with no excess around them.
    """
    if sprofile.n % 6 == 0:
        return sum(s * c for s, c in sprofile.histogram.items() if s >= 2 and s % 2 == 0)
    return sprofile.total()


def surfeit_report(D: DominatingSet, profile: ExcessProfile | None = None) -> SurfeitReport:
    profile = profile or excess_profile(D)
    sp = surfeit_profile(D, profile)
    return SurfeitReport(
        delta_total=profile.total,
        zeta_total=int(sp.s_values[sp.outside].sum()),
        zeta_m1=zeta_m1(profile),
        zeta_m2=zeta_m2(sp),
        zeta_max=zeta_max(profile),
    )


class SurfeitAnalysis:
    """Per-vertex arrays shared by the T-partition and the lemma checkers."""

    def __init__(self, D: DominatingSet, profile: ExcessProfile | None = None):
        self.D = D
        self.n = D.n
        self.profile = profile or excess_profile(D)
        self.sprofile = surfeit_profile(D, self.profile)
        self.in_d = D.members.bits
        self.delta = self.profile.per_vertex
        # V_zeta: outside vertices with delta(N[v]) >= 2
        self.in_vzeta = self.sprofile.outside & (self.sprofile.s_values >= 1)
        # |N[u] & V_zeta| for every u
        self.zeta_neighbors = closed_neighborhood_sum(self.in_vzeta.astype(np.int64), self.n)

    @cached_property
    def c_set(self) -> VertexSet:
        return VertexSet(self.n, self.delta >= 2)

    def c_members(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.delta >= 2)]

    def t_lists(self, v: int) -> list[list[int]]:
        """T_1(v)..T_5(v) as sorted mask lists (index 0 holds T_1)."""
        delta, in_d = self.delta, self.in_d
        t: list[list[int]] = [[], [], [], [], []]
        for u in sphere_masks(v, 1, self.n):
            if delta[u] == 1:
                t[4 if in_d[u] else 0].append(u)
        for u in sphere_masks(v, 2, self.n):
            if delta[u] != 1:
                continue
            diff = u ^ v
            low = diff & -diff
            # the two common closed neighbors of u and v
            shared = int(in_d[v ^ low]) + int(in_d[v ^ (diff ^ low)])
            t[(1, 3, 2)[shared]].append(u)
        return [sorted(x) for x in t]

    def s_lists(self, t: list[list[int]]) -> list[list[int]]:
        return [[u for u in ti if self.zeta_neighbors[u] == 2] for ti in t]


@dataclass(frozen=True)
class TPartition:
    center: int
    T: tuple[VertexSet, ...]  # T[0] is T_1, ..., T[4] is T_5
    S: tuple[VertexSet, ...]


def t_partition(
    v: int,
    D: DominatingSet,
    profile: ExcessProfile | None = None,
    analysis: SurfeitAnalysis | None = None,
) -> TPartition:
    an = analysis or SurfeitAnalysis(D, profile)
    v = int(v)
    if not 0 <= v < (1 << D.n) or an.delta[v] < 2:
        raise ValueError(f"vertex {v} is not in C(D)")
    t = an.t_lists(v)
    s = an.s_lists(t)
    return TPartition(
        v,
        tuple(VertexSet.from_masks(D.n, x) for x in t),
        tuple(VertexSet.from_masks(D.n, x) for x in s),
    )


@dataclass
class LemmaResult:
    lemma: int
    violations: list[dict] = field(default_factory=list)
    vacuity: dict[str, int] = field(default_factory=dict)
    slack_x2: int | None = None
    details: dict[str, int | bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _analysis(D: DominatingSet, analysis: SurfeitAnalysis | None) -> SurfeitAnalysis:
    return analysis if analysis is not None else SurfeitAnalysis(D)


def check_lemma1(D: DominatingSet, analysis: SurfeitAnalysis | None = None) -> LemmaResult:
    """Excess-1 vertices at distance >= 3 from C see at least three V_zeta vertices."""
    require_mod6(D.n, "lemma 1")
    an = _analysis(D, analysis)
    C = an.c_set
    res = LemmaResult(1)
    checked = 0
    for u in np.flatnonzero(an.delta == 1):
        u = int(u)
        if len(C) and distance_to_set(u, C, 3) < 3:
            continue
        checked += 1
        if an.zeta_neighbors[u] < 3:
            res.violations.append({"vertex": u, "zeta_neighbors": int(an.zeta_neighbors[u])})
    res.vacuity["hypotheses"] = checked
    return res


def _coord_count(an: SurfeitAnalysis, v: int, bit: int) -> int:
    """|(N_2[v] & V_delta)[a]| with v translated to (0); ``bit`` is the mask of a."""
    return sum(1 for w in sphere_masks(v, 2, an.n) if an.delta[w] >= 1 and (w ^ v) & bit)


def check_lemma2(D: DominatingSet, analysis: SurfeitAnalysis | None = None) -> LemmaResult:
    """Excess-1 vertices seeing at most two V_zeta vertices see exactly two, plus Claims 1-4."""
    require_mod6(D.n, "lemma 2")
    an = _analysis(D, analysis)
    n, delta, in_d = an.n, an.delta, an.in_d
    res = LemmaResult(2)
    counts = {"hypotheses": 0, "claim2": 0, "claim3": 0, "claim4": 0}
    for u in np.flatnonzero((delta == 1) & (an.zeta_neighbors <= 2)):
        u = int(u)
        counts["hypotheses"] += 1
        zc = int(an.zeta_neighbors[u])
        if zc != 2:
            res.violations.append({"vertex": u, "check": "count", "zeta_neighbors": zc})
        claim1 = False
        for v in sphere_masks(u, 1, n):
            if delta[v] < 2 or in_d[v]:
                continue
            # u in T_1(v) iff u is outside D (delta_u = 1 already)
            if in_d[u]:
                continue
            claim1 = True
            counts["claim2"] += 1
            excess_nbrs = sum(1 for w in sphere_masks(v, 1, n) if delta[w] >= 1)
            if excess_nbrs > 3:
                res.violations.append(
                    {"vertex": u, "check": "claim2", "center": v, "value": excess_nbrs}
                )
        for v in sphere_masks(u, 2, n):
            if delta[v] < 2:
                continue
            diff = u ^ v
            a = diff & -diff
            b = diff ^ a
            if in_d[v ^ a] or in_d[v ^ b]:
                continue  # u is in T_3(v) or T_4(v)
            claim1 = True
            ca, cb = _coord_count(an, v, a), _coord_count(an, v, b)
            if not in_d[u]:
                counts["claim3"] += 1
                if delta[v ^ a] or delta[v ^ b] or ca > 3 or cb > 3:
                    res.violations.append(
                        {"vertex": u, "check": "claim3", "center": v,
                         "value": max(ca, cb)}
                    )
            else:
                counts["claim4"] += 1
                if ca > 2 or cb > 2:
                    res.violations.append(
                        {"vertex": u, "check": "claim4", "center": v, "value": max(ca, cb)}
                    )
        if not claim1:
            res.violations.append({"vertex": u, "check": "claim1"})
    res.vacuity = counts
    return res


def check_lemma3(D: DominatingSet, analysis: SurfeitAnalysis | None = None) -> LemmaResult:
    """Size bounds on S_1(v) | S_2(v) (v outside D) and S_2(v) (v in D) for v in C."""
    require_mod6(D.n, "lemma 3")
    an = _analysis(D, analysis)
    res = LemmaResult(3)
    checked = nonempty = 0
    for v in an.c_members():
        s = an.s_lists(an.t_lists(v))
        size = len(s[1]) if an.in_d[v] else len(s[0]) + len(s[1])
        checked += 1
        nonempty += size > 0
        limit_x2 = 3 * (an.n - int(an.delta[v]))
        if 2 * size > limit_x2:
            res.violations.append({"vertex": v, "size_x2": 2 * size, "limit_x2": limit_x2})
    res.vacuity = {"centers": checked, "nonempty": nonempty}
    return res


def _require_lemma45(n: int, what: str) -> None:
    require_mod6(n, what)
    if n < 12:
        raise NotApplicableError(f"{what} requires n >= 12 (got n={n})")


def lemma4_sides_x2(an: SurfeitAnalysis) -> tuple[int, int]:
    """Both sides of the lemma 4 inequality, each multiplied by 2."""
    n, h = an.n, an.profile.count
    lhs = sum((s + 1) * c for s, c in an.sprofile.histogram.items() if s >= 2 and s % 2 == 0)
    rhs_x2 = (
        6 * an.profile.total
        - 2 * h(2)
        - 9 * h(n - 3)
        - 2 * (n + 1) * h(n - 2)
        - (4 * n - 1) * h(n - 1)
        - 6 * n * h(n)
    )
    return 2 * lhs, rhs_x2


def check_lemma4(D: DominatingSet, analysis: SurfeitAnalysis | None = None) -> LemmaResult:
    _require_lemma45(D.n, "lemma 4")
    an = _analysis(D, analysis)
    lhs_x2, rhs_x2 = lemma4_sides_x2(an)
    # the left side recounted from the excess side: sum_u delta_u |N[u] & V_zeta|
    recount = int((an.delta * an.zeta_neighbors).sum())
    res = LemmaResult(4, slack_x2=lhs_x2 - rhs_x2)
    res.details = {"lhs_x2": lhs_x2, "rhs_x2": rhs_x2, "lhs_recount": recount}
    res.vacuity = {"zeta_vertices": int(an.in_vzeta.sum())}
    if lhs_x2 < rhs_x2:
        res.violations.append({"check": "inequality", "lhs_x2": lhs_x2, "rhs_x2": rhs_x2})
    if 2 * recount != lhs_x2:
        res.violations.append({"check": "identity", "lhs_x2": lhs_x2, "recount_x2": 2 * recount})
    return res


def check_lemma5(D: DominatingSet, analysis: SurfeitAnalysis | None = None) -> LemmaResult:
    _require_lemma45(D.n, "lemma 5")
    an = _analysis(D, analysis)
    m1, m2 = zeta_m1(an.profile), zeta_m2(an.sprofile)
    zmax, dv = zeta_max(an.profile), an.profile.total
    slack = (m2 - m1) - (2 * dv - zmax)
    res = LemmaResult(5, slack_x2=2 * slack)
    res.details = {
        "zeta_m1": m1,
        "zeta_m2": m2,
        "zeta_max": zmax,
        "delta_total": dv,
        "methods_agree": m1 == m2,
        "zeta_max_ge_2delta": zmax >= 2 * dv,
    }
    res.vacuity = {"hypotheses": 1}
    if slack < 0:
        res.violations.append({"check": "inequality", "slack_x2": 2 * slack})
    if m1 != m2:
        res.violations.append({"check": "methods_agree", "zeta_m1": m1, "zeta_m2": m2})
    return res


LEMMA_CHECKERS = {
    1: check_lemma1,
    2: check_lemma2,
    3: check_lemma3,
    4: check_lemma4,
    5: check_lemma5,
}


def check_lemmas(D: DominatingSet, which=(1, 2, 3, 4, 5)) -> dict[int, LemmaResult | str]:
    """Run the selected checkers; ones whose precondition fails map to a skip message."""
    an = SurfeitAnalysis(D)
    out: dict[int, LemmaResult | str] = {}
    for k in sorted(which):
        try:
            out[k] = LEMMA_CHECKERS[k](D, an)
        except NotApplicableError as exc:
            out[k] = f"skipped: precondition ({exc})"
    return out

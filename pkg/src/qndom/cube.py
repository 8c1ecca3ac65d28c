"""Hypercube vertices, vertex sets and neighborhoods.

A vertex of Q_n is a subset of the coordinates {1..n}, stored as an n-bit
mask: coordinate i is present iff bit i-1 is set.  So (2,3,5) is
``0b10110`` and the empty vertex (0) is mask 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

MAX_DIM = 30


def check_dim(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {n!r}")
    return int(n)


def check_vertex(v: int, n: int) -> int:
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex mask {v} out of range for Q_{n}")
    return int(v)


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex that remembers its dimension."""

    n: int
    mask: int

    def __post_init__(self):
        check_dim(self.n)
        check_vertex(self.mask, self.n)

    @classmethod
    def from_coords(cls, n: int, coords: Iterable[int]) -> "Vertex":
        return cls(n, mask_from_coords(coords, n))

    @property
    def coords(self) -> tuple[int, ...]:
        return coords_of(self.mask)

    def __int__(self) -> int:
        return self.mask

    def __index__(self) -> int:
        return self.mask

    def __str__(self) -> str:
        return format_vertex(self.mask)


def mask_from_coords(coords: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for c in coords:
        if c == 0:  # (0) denotes the empty vertex; (a, 0) == (a)
            continue
        if c < 1 or (n is not None and c > n):
            raise ValueError(f"coordinate {c} out of range 1..{n}")
        mask |= 1 << (c - 1)
    return mask


def coords_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def format_vertex(mask: int) -> str:
    c = coords_of(int(mask))
    return "(" + ",".join(map(str, c)) + ")" if c else "(0)"


def _mask_and_dim(v, n: int | None) -> tuple[int, int | None]:
    if isinstance(v, Vertex):
        if n is not None and v.n != n:
            raise ValueError(f"dimension mismatch: Q_{v.n} vertex used in Q_{n}")
        return v.mask, v.n
    return int(v), n


def hamming_distance(u, v, n: int | None = None) -> int:
    """Graph distance in Q_n, i.e. the size of the symmetric difference."""
    a, n = _mask_and_dim(u, n)
    b, n = _mask_and_dim(v, n)
    if n is not None:
        check_vertex(a, n)
        check_vertex(b, n)
    return (a ^ b).bit_count()


def sphere_masks(v: int, i: int, n: int) -> list[int]:
    """Masks at distance exactly ``i`` from ``v``, in increasing order of flipped bits."""
    if not 0 <= i <= n:
        raise ValueError(f"radius {i} outside 0..{n}")
    v = check_vertex(int(v), n)
    return [v ^ sum(1 << b for b in bits) for bits in combinations(range(n), i)]


class VertexSet:
    """Immutable dense subset of V(Q_n), backed by a boolean array of length 2^n."""

    __slots__ = ("n", "_bits", "_size")

    def __init__(self, n: int, bits: np.ndarray):
        self.n = check_dim(n)
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != (1 << n,):
            raise ValueError(f"membership array must have length 2^{n}")
        if bits.flags.writeable:
            bits = bits.copy()
            bits.flags.writeable = False
        self._bits = bits
        self._size = int(np.count_nonzero(bits))

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, np.zeros(1 << check_dim(n), dtype=bool))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, np.ones(1 << check_dim(n), dtype=bool))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "VertexSet":
        bits = np.zeros(1 << check_dim(n), dtype=bool)
        for m in masks:
            bits[check_vertex(int(m), n)] = True
        return cls(n, bits)

    @classmethod
    def from_coords(cls, n: int, vertices: Iterable[Iterable[int]]) -> "VertexSet":
        return cls.from_masks(n, (mask_from_coords(c, n) for c in vertices))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def masks(self) -> np.ndarray:
        return np.flatnonzero(self._bits)

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[int]:
        return (int(m) for m in self.masks())

    def __contains__(self, v) -> bool:
        m, _ = _mask_and_dim(v, self.n)
        return 0 <= m < len(self._bits) and bool(self._bits[m])

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash((self.n, self._bits.tobytes()))

    def _same_dim(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: Q_{self.n} vs Q_{other.n}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same_dim(other)
        return VertexSet(self.n, self._bits | other._bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same_dim(other)
        return VertexSet(self.n, self._bits & other._bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same_dim(other)
        return VertexSet(self.n, self._bits & ~other._bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._same_dim(other)
        return not np.any(self._bits & ~other._bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self._bits)

    def __repr__(self) -> str:
        shown = ", ".join(format_vertex(m) for m in self.masks()[:8])
        more = ", ..." if self._size > 8 else ""
        return f"VertexSet(n={self.n}, {{{shown}{more}}})"


def sphere(v, i: int, n: int) -> VertexSet:
    mask, n = _mask_and_dim(v, n)
    return VertexSet.from_masks(n, sphere_masks(mask, i, n))


def closed_neighborhood(v, n: int) -> VertexSet:
    mask, n = _mask_and_dim(v, n)
    check_vertex(mask, n)
    return VertexSet.from_masks(n, [mask] + [mask ^ (1 << b) for b in range(n)])


def neighborhood_cover(bits: np.ndarray, n: int) -> np.ndarray:
    """For each vertex, how many members of ``bits`` lie in its closed neighborhood."""
    counts = bits.astype(np.int64)
    idx = np.arange(1 << n)
    for b in range(n):
        counts += bits[idx ^ (1 << b)]
    return counts


def closed_neighborhood_sum(values: np.ndarray, n: int) -> np.ndarray:
    """out[v] = sum of values[u] over u in N[v]."""
    out = np.array(values, dtype=np.int64)
    idx = np.arange(1 << n)
    for b in range(n):
        out += values[idx ^ (1 << b)]
    return out


def sphere_sum(values: np.ndarray, n: int, radius: int) -> np.ndarray:
    """out[v] = sum of values[u] over u at distance exactly ``radius`` from v."""
    idx = np.arange(1 << n)
    out = np.zeros(1 << n, dtype=np.int64)
    for bits in combinations(range(n), radius):
        out += values[idx ^ sum(1 << b for b in bits)]
    return out


def closed_neighborhood_of_set(S: VertexSet) -> VertexSet:
    return VertexSet(S.n, neighborhood_cover(S.bits, S.n) > 0)


def coord_union(S: VertexSet) -> frozenset[int]:
    acc = int(np.bitwise_or.reduce(S.masks())) if len(S) else 0
    return frozenset(coords_of(acc))


def filter_by_coord(S: VertexSet, a: int) -> VertexSet:
    if not 1 <= a <= S.n:
        raise ValueError(f"coordinate {a} out of range 1..{S.n}")
    idx = np.arange(1 << S.n)
    return VertexSet(S.n, S.bits & ((idx >> (a - 1)) & 1).astype(bool))


def distance_to_set(u, S: VertexSet, cap: int) -> int:
    """Distance from ``u`` to the nearest member of ``S``, or ``cap + 1`` if it exceeds ``cap``.

    Grows Hamming spheres around ``u`` one radius at a time and stops at the
    first hit, so only the balls up to ``cap`` are ever touched.
    """
    mask, _ = _mask_and_dim(u, S.n)
    check_vertex(mask, S.n)
    bits = S.bits
    for r in range(0, min(cap, S.n) + 1):
        for w in sphere_masks(mask, r, S.n):
            if bits[w]:
                return r
    return cap + 1

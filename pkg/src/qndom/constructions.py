"""Concrete dominating sets: Hamming codes, doubling, greedy."""
from __future__ import annotations

import heapq

import numpy as np

from .cube import MAX_DIM, VertexSet, check_dim
from .domination import DominatingSet

GREEDY_MAX_DIM = 20


def hamming_perfect_code(r: int) -> DominatingSet:
    """The Hamming code of length 2^r - 1.

    The parity-check matrix has column i equal to the binary expansion of i,
    so a vertex is a codeword iff the XOR of its coordinates is 0.
    """
    if not 2 <= r <= 4:
        raise ValueError(f"r must be in 2..4, got {r}")
    n = (1 << r) - 1
    syndrome = np.zeros(1 << n, dtype=np.int64)
    idx = np.arange(1 << n)
    for i in range(1, n + 1):
        syndrome ^= np.where((idx >> (i - 1)) & 1, i, 0)
    return DominatingSet(VertexSet(n, syndrome == 0))


def double(D: DominatingSet) -> DominatingSet:
    """D together with a copy of D that has coordinate n+1 added; dominates Q_{n+1}."""
    n = D.n
    if n >= MAX_DIM:
        raise ValueError(f"cannot double beyond dimension {MAX_DIM}")
    bits = D.members.bits
    return DominatingSet(VertexSet(n + 1, np.concatenate([bits, bits])))


def greedy_dominating_set(n: int) -> DominatingSet:
    """Pick the vertex covering the most undominated vertices until all are covered.

    Ties go to the lowest mask.  Gains only ever decrease, so stale heap
    entries are re-pushed lazily.
    """
    n = check_dim(n)
    if n > GREEDY_MAX_DIM:
        raise ValueError(f"greedy is limited to n <= {GREEDY_MAX_DIM}")
    size = 1 << n
    flips = [1 << b for b in range(n)]
    gain = [n + 1] * size
    dominated = bytearray(size)
    chosen = bytearray(size)
    heap = [(-(n + 1), v) for v in range(size)]
    remaining = size
    while remaining:
        g, v = heapq.heappop(heap)
        if -g != gain[v]:
            heapq.heappush(heap, (-gain[v], v))
            continue
        chosen[v] = 1
        for w in [v] + [v ^ f for f in flips]:
            if dominated[w]:
                continue
            dominated[w] = 1
            remaining -= 1
            gain[w] -= 1
            for f in flips:
                gain[w ^ f] -= 1
    bits = np.frombuffer(bytes(chosen), dtype=np.uint8).astype(bool)
    return DominatingSet(VertexSet(n, bits))

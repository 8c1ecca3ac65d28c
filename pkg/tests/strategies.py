from hypothesis import strategies as st

from oracles import ball


@st.composite
def dominating_sets(draw, min_n=1, max_n=6, dims=None):
    """(n, masks): a random subset patched up by adding every undominated vertex."""
    n = draw(st.sampled_from(dims) if dims else st.integers(min_n, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=1 << n))
    covered = set()
    for m in masks:
        covered |= ball(m, n)
    for v in range(1 << n):
        if v not in covered:
            masks.add(v)
            covered |= ball(v, n)
    return n, masks

from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import ball, dist, ring
from qndom.cube import (
    Vertex,
    VertexSet,
    closed_neighborhood,
    closed_neighborhood_of_set,
    coord_union,
    distance_to_set,
    filter_by_coord,
    format_vertex,
    hamming_distance,
    mask_from_coords,
    sphere,
)


def V(*coords, n=6):
    return mask_from_coords(coords, n)


@st.composite
def dim_and_vertex(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return n, draw(st.integers(0, (1 << n) - 1))


@st.composite
def dim_and_set(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=1 << n))
    return n, masks


def test_coordinate_bit_mapping():
    assert mask_from_coords((2, 3, 5)) == 0b10110
    assert mask_from_coords((0,)) == 0
    assert mask_from_coords((1, 0)) == mask_from_coords((1,))
    assert Vertex.from_coords(5, (2, 3, 5)).coords == (2, 3, 5)
    assert format_vertex(0) == "(0)"
    assert str(Vertex(5, 0b10110)) == "(2,3,5)"


def test_vertex_validation():
    with pytest.raises(ValueError):
        Vertex(3, 8)
    with pytest.raises(ValueError):
        Vertex(0, 0)
    with pytest.raises(ValueError):
        mask_from_coords((4,), 3)


class TestHammingDistance:
    def test_examples(self):
        v = V(1, 4)
        assert hamming_distance(v, v) == 0
        assert hamming_distance(V(0), V(1)) == 1
        assert hamming_distance(V(1, 2), V(2, 3)) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            hamming_distance(Vertex(3, 1), Vertex(4, 1))
        with pytest.raises(ValueError):
            hamming_distance(Vertex(3, 1), 2, n=4)

    @given(dim_and_vertex(), st.data())
    def test_metric(self, nv, data):
        n, u = nv
        v = data.draw(st.integers(0, (1 << n) - 1))
        w = data.draw(st.integers(0, (1 << n) - 1))
        assert hamming_distance(u, v, n) == hamming_distance(v, u, n)
        assert (hamming_distance(u, v, n) == 0) == (u == v)
        assert hamming_distance(u, w, n) <= hamming_distance(u, v, n) + hamming_distance(v, w, n)


class TestSphere:
    def test_examples(self):
        assert sphere(V(0), 0, 6) == VertexSet.from_masks(6, [0])
        assert len(sphere(V(2), 1, 6)) == 6
        # brute-force count over all 64 vertices
        assert len(ring(V(2), 6, 2)) == 15
        assert len(sphere(V(2), 2, 6)) == 15

    def test_radius_too_large(self):
        with pytest.raises(ValueError):
            sphere(0, 4, 3)

    @given(dim_and_vertex(max_n=7))
    def test_sizes_and_partition(self, nv):
        n, v = nv
        total = 0
        for i in range(n + 1):
            s = sphere(v, i, n)
            assert len(s) == comb(n, i)
            assert set(s) == ring(v, n, i)
            total += len(s)
        assert total == 1 << n


class TestClosedNeighborhood:
    def test_examples(self):
        assert set(closed_neighborhood(V(0, n=3), 3)) == {0, 1, 2, 4}
        assert set(closed_neighborhood(1, 1)) == {0, 1}
        assert len(closed_neighborhood(V(2, 5), 6)) == 7

    @given(dim_and_vertex())
    def test_is_disjoint_union_of_spheres(self, nv):
        n, v = nv
        s0, s1 = sphere(v, 0, n), sphere(v, 1, n)
        nb = closed_neighborhood(v, n)
        assert len(s0 & s1) == 0
        assert nb == s0 | s1
        assert len(nb) == n + 1 and v in nb

    def test_of_set_examples(self):
        assert len(closed_neighborhood_of_set(VertexSet.empty(4))) == 0
        # n=3, {(0),(1,2,3)}: enumerate by hand
        S = VertexSet.from_coords(3, [(0,), (1, 2, 3)])
        assert set(closed_neighborhood_of_set(S)) == ball(0, 3) | ball(7, 3) == set(range(8))
        assert closed_neighborhood_of_set(VertexSet.full(4)) == VertexSet.full(4)

    @given(dim_and_set(), st.data())
    def test_of_set_union_and_monotone(self, ns, data):
        n, masks = ns
        S = VertexSet.from_masks(n, masks)
        expected = set()
        for m in masks:
            expected |= ball(m, n)
        assert set(closed_neighborhood_of_set(S)) == expected
        sub = data.draw(st.sets(st.sampled_from(sorted(masks)))) if masks else set()
        assert closed_neighborhood_of_set(VertexSet.from_masks(n, sub)) <= closed_neighborhood_of_set(S)


class TestCoordinates:
    S = VertexSet.from_coords(5, [(1, 2, 3), (2, 5), (3, 5)])

    def test_coord_union_example(self):
        assert coord_union(self.S) == {1, 2, 3, 5}
        assert coord_union(VertexSet.empty(5)) == frozenset()
        assert coord_union(VertexSet.from_masks(5, [0])) == frozenset()

    def test_filter_example(self):
        assert filter_by_coord(self.S, 5) == VertexSet.from_coords(5, [(2, 5), (3, 5)])
        assert len(filter_by_coord(self.S, 4)) == 0
        with pytest.raises(ValueError):
            filter_by_coord(self.S, 6)

    @given(dim_and_set())
    def test_filter_agrees_with_union(self, ns):
        n, masks = ns
        S = VertexSet.from_masks(n, masks)
        g = coord_union(S)
        for a in range(1, n + 1):
            f = filter_by_coord(S, a)
            assert f <= S
            assert (a in g) == (len(f) > 0)


class TestDistanceToSet:
    def test_examples(self):
        S = VertexSet.from_masks(5, [3, 9])
        assert distance_to_set(3, S, 3) == 0
        assert distance_to_set(0, sphere(0, 1, 5), 3) == 1
        assert distance_to_set(V(0, n=3), VertexSet.from_coords(3, [(1, 2, 3)]), 3) == 3

    def test_cap_marker(self):
        S = VertexSet.from_coords(6, [(1, 2, 3, 4, 5, 6)])
        assert distance_to_set(0, S, 3) == 4
        assert distance_to_set(0, VertexSet.empty(6), 3) == 4

    @given(dim_and_set(), st.data())
    def test_matches_brute_force(self, ns, data):
        n, masks = ns
        u = data.draw(st.integers(0, (1 << n) - 1))
        cap = data.draw(st.integers(0, n))
        got = distance_to_set(u, VertexSet.from_masks(n, masks), cap)
        true = min((dist(u, m) for m in masks), default=n + 1)
        assert got == (true if true <= cap else cap + 1)


def test_vertex_set_immutable():
    S = VertexSet.from_masks(3, [1])
    with pytest.raises(ValueError):
        S.bits[0] = True

"""Construction invariants, links, cycles, and topology helpers."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import tpkit as T
from tpkit import (
    DegenerateCell,
    DuplicateCell,
    FlagViolation,
    Full4Cycle,
    InvalidIndex,
    NonManifoldEdge,
    PentagonChord,
    SharedEdges,
    UnfilledTriangleClique,
    ValidationError,
    VertexCycle,
)

from _oracles import subset_induced_cycles

PENTAGON = ((0, 1, 2, 3, 4),)


def petersen():
    outer = {i: {(i + 1) % 5, (i - 1) % 5, i + 5} for i in range(5)}
    inner = {i + 5: {(i + 2) % 5 + 5, (i - 2) % 5 + 5, i} for i in range(5)}
    return {**outer, **inner}


class TestBuildTpComplex:
    def test_single_pentagon(self):
        cx = T.build_tp_complex(5, (), PENTAGON)
        assert cx.pentagons == PENTAGON
        assert len(cx.edges) == 5

    def test_triangles_sorted_and_canonical(self):
        cx = T.build_tp_complex(4, [(2, 1, 0), (3, 2, 1)])
        assert cx.triangles == ((0, 1, 2), (1, 2, 3))

    def test_pentagon_canonical_cycle(self):
        cx = T.build_tp_complex(5, (), [(2, 3, 4, 0, 1)])
        assert cx.pentagons == PENTAGON

    def test_bad_index(self):
        with pytest.raises(InvalidIndex):
            T.build_tp_complex(3, [(0, 1, 5)])

    def test_bool_is_not_an_index(self):
        with pytest.raises(InvalidIndex):
            T.build_tp_complex(3, [(0, True, 2)])

    def test_degenerate_cell(self):
        with pytest.raises(DegenerateCell):
            T.build_tp_complex(3, [(0, 1, 1)])

    def test_duplicate_cell(self):
        with pytest.raises(DuplicateCell):
            T.build_tp_complex(3, [(0, 1, 2), (2, 0, 1)])

    def test_duplicate_pentagon_under_rotation(self):
        with pytest.raises(DuplicateCell):
            T.build_tp_complex(5, (), [(0, 1, 2, 3, 4), (4, 3, 2, 1, 0)])

    def test_pentagon_chord_beats_unfilled_clique(self):
        # a triangle on three consecutive pentagon vertices chords it
        with pytest.raises(PentagonChord):
            T.build_tp_complex(5, [(0, 1, 2)], PENTAGON)

    def test_two_pentagons_sharing_two_vertices_make_a_4cycle(self):
        with pytest.raises(Full4Cycle):
            T.build_tp_complex(8, (), [(0, 1, 2, 3, 4), (0, 5, 2, 6, 7)])

    def test_shared_edges(self):
        with pytest.raises(SharedEdges):
            T.build_tp_complex(7, (), [(0, 1, 2, 3, 4), (0, 4, 5, 6, 1)])

    def test_unfilled_clique(self):
        with pytest.raises(UnfilledTriangleClique):
            T.build_tp_complex(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1)])

    def test_nonmanifold_edge(self):
        with pytest.raises(NonManifoldEdge):
            T.build_tp_complex(5, [(0, 1, 2), (0, 1, 3), (0, 1, 4)])

    def test_tetrahedron_boundary_is_a_valid_tpc(self):
        cx = T.build_tp_complex(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
        assert T.euler_characteristic(cx) == 2
        assert T.boundary_edges(cx) == ()

    def test_negative_vertex_count(self):
        with pytest.raises(ValidationError):
            T.build_tp_complex(-1, ())


class TestBuildSimplicialComplex:
    def test_unfilled_clique_is_flag_violation(self):
        with pytest.raises(FlagViolation) as err:
            T.build_simplicial_complex(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1)])
        assert err.value.kind == "unfilled-clique"

    def test_4clique_rejected(self):
        with pytest.raises(FlagViolation) as err:
            T.build_simplicial_complex(
                4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
            )
        assert err.value.kind == "four-clique"

    def test_center_markers(self):
        cx = T.build_simplicial_complex(
            6,
            [(0, 1, 5), (1, 2, 5), (2, 3, 5), (3, 4, 5), (0, 4, 5)],
            center_of=[(0, 5)],
        )
        assert cx.center_set == frozenset({5})
        assert cx.vertex_origin(5) == "center"
        assert cx.vertex_origin(0) == "original"

    def test_adjacent_centers_rejected(self):
        tris = [(0, 1, 2), (1, 2, 3)]
        with pytest.raises(ValidationError):
            T.build_simplicial_complex(4, tris, center_of=[(0, 1), (1, 2)])

    def test_duplicate_center_vertex_rejected(self):
        with pytest.raises(ValidationError):
            T.build_simplicial_complex(3, [(0, 1, 2)], center_of=[(0, 0), (1, 0)])

    def test_induced_4cycles_are_allowed_in_tps(self):
        # four flat triangles closed around a vertex: the rim is an induced
        # 4-cycle, which only the tpc builder forbids
        cx = T.build_simplicial_complex(
            5, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1)]
        )
        assert cx.vertex_count == 5


class TestLinks:
    def test_pentagon_corner_link_edge(self):
        cx = T.build_tp_complex(5, (), PENTAGON)
        link = T.link_of(cx, 0)
        assert link.nodes == (1, 4)
        (edge,) = link.edges
        assert (edge.a, edge.b) == (1, 4)
        assert edge.weight.units == 18
        assert edge.tag == "pentagon-corner"

    def test_link_weights_in_subdivision(self, subdivided_presets):
        sx = subdivided_presets["star4"]
        apex = T.link_of(sx, 13)
        assert {e.tag for e in apex.edges} == {"wheel-apex-corner"}
        assert apex.total_units() == 60
        rim = T.link_of(sx, 0)
        assert {e.tag for e in rim.edges} == {"wheel-rim-corner"}
        assert rim.total_units() == 72

    def test_link_of_bad_vertex(self):
        cx = T.build_tp_complex(3, [(0, 1, 2)])
        with pytest.raises(InvalidIndex):
            T.link_of(cx, 3)


class TestFullness:
    def test_pentagon_boundary_full_only_after_subdivision(self):
        cx = T.build_tp_complex(5, (), PENTAGON)
        # the cycle spans the pentagon cell itself, so it is filled in X
        assert not T.is_full_cycle(cx, (0, 1, 2, 3, 4))
        assert T.is_full_cycle(T.subdivide(cx), (0, 1, 2, 3, 4))

    def test_filled_triangle_is_not_full(self):
        cx = T.build_tp_complex(3, [(0, 1, 2)])
        assert not T.is_full_subcomplex(cx, {0, 1, 2})

    def test_chorded_cycle_is_not_full(self, subdivided_presets):
        sx = subdivided_presets["star4"]
        # 0-1-13 spans a triangle, and 1-2-3-4-13 is chorded by spokes
        assert not T.is_full_cycle(sx, (0, 1, 13))
        assert not T.is_full_cycle(sx, (1, 2, 3, 4, 13))


class TestInducedCycles:
    def test_triangle_graph(self):
        graph = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
        cycles = T.enumerate_induced_cycles(graph, 5)
        assert [c.vertices for c in cycles] == [(0, 1, 2)]

    def test_k4_has_four_triangles_and_no_4cycles(self):
        graph = {v: {0, 1, 2, 3} - {v} for v in range(4)}
        cycles = T.enumerate_induced_cycles(graph, 6)
        assert sorted(c.vertices for c in cycles) == [
            (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
        ]

    def test_petersen_counts(self):
        graph = petersen()
        five = T.enumerate_induced_cycles(graph, 5)
        six = T.enumerate_induced_cycles(graph, 6)
        assert len(five) == 12
        assert len([c for c in six if len(c) == 6]) == 10

    def test_max_len_cutoff(self):
        graph = petersen()
        assert T.enumerate_induced_cycles(graph, 4) == []

    def test_matches_subset_oracle_on_petersen(self):
        graph = petersen()
        mine = {c.vertices for c in T.enumerate_induced_cycles(graph, 9)}
        assert mine == subset_induced_cycles(graph, 9)

    @settings(max_examples=60, deadline=None)
    @given(st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=16))
    def test_matches_subset_oracle_on_random_graphs(self, pairs):
        graph = {v: set() for v in range(8)}
        for a, b in pairs:
            if a != b:
                graph[a].add(b)
                graph[b].add(a)
        mine = {c.vertices for c in T.enumerate_induced_cycles(graph, 8)}
        assert mine == subset_induced_cycles(graph, 8)


class TestVertexCycle:
    def test_from_sequence_canonicalizes(self):
        assert VertexCycle.from_sequence((2, 3, 4, 0, 1)).vertices == (0, 1, 2, 3, 4)
        assert VertexCycle.from_sequence((0, 4, 3, 2, 1)).vertices == (0, 1, 2, 3, 4)

    def test_too_short(self):
        with pytest.raises(ValueError):
            VertexCycle.from_sequence((0, 1))

    def test_repeats(self):
        with pytest.raises(ValueError):
            VertexCycle.from_sequence((0, 1, 0, 2))

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.integers(0, 100), min_size=3, max_size=9, unique=True),
        st.integers(0, 8),
        st.booleans(),
    )
    def test_canonical_cycle_invariance(self, seq, rotation, flip):
        r = rotation % len(seq)
        other = seq[r:] + seq[:r]
        if flip:
            other = other[::-1]
        assert T.canonical_cycle(seq) == T.canonical_cycle(other)


class TestTopology:
    def test_disc_boundary(self, presets):
        star = presets["star4"]
        assert T.euler_characteristic(star) == 1
        (cycle,) = T.boundary_cycles(star)
        assert len(cycle) == 12
        assert T.interior_vertices(star) == frozenset({0})

    def test_two_triangles_sharing_a_vertex(self):
        cx = T.build_tp_complex(5, [(0, 1, 2), (0, 3, 4)])
        assert T.euler_characteristic(cx) == 1
        assert len(T.boundary_cycles(cx)) == 2
        assert T.is_connected(cx)
        assert not T.is_cat0_disc(cx).ok
        assert "not-a-disc" in T.is_cat0_disc(cx).reasons

    def test_disjoint_triangles(self):
        cx = T.build_tp_complex(6, [(0, 1, 2), (3, 4, 5)])
        assert not T.is_connected(cx)
        verdict = T.is_cat0_disc(cx)
        assert "disconnected" in verdict.reasons
        assert "euler-characteristic" in verdict.reasons

    def test_distances(self, presets):
        star = presets["star4"]
        assert T.combinatorial_distance(star, 1, 1) == 0
        assert T.combinatorial_distance(star, 1, 2) == 1
        assert T.combinatorial_distance(star, 2, 12) == 2
        two = T.build_tp_complex(6, [(0, 1, 2), (3, 4, 5)])
        assert T.combinatorial_distance(two, 0, 5) == math.inf

"""Acceptance gate: one test per criterion, each printing a pass line.

The corpus shared by the property criteria is 100 random CAT(0) discs
(seeds 1 to 100, 60 cells, pentagon bias 1/2) plus the four presets and
pentagon/triangle tiling patches.
"""

from fractions import Fraction

import pytest

import tpkit as T
from tpkit import (
    Full4Cycle,
    GeneratorSpec,
    PentagonChord,
    SharedEdges,
    SimplicialComplex2D,
    UnfilledTriangleClique,
)

from _oracles import (
    brute_dwheel_orbits,
    exhaustive_weighted_girth,
    subset_induced_cycles,
)


# ---------------------------------------------------------------------------
# shared corpus

DISC_SEEDS = range(1, 101)


@pytest.fixture(scope="module")
def corpus(presets):
    entries = list(presets.items())
    entries.append(("pent-tiling-1", T.gen_pentagon_tiling(1)))
    entries.append(("pent-tiling-2", T.gen_pentagon_tiling(2)))
    for radius in (1, 2, 3):
        entries.append((f"tri-tiling-{radius}", T.gen_triangle_tiling(radius)))
    for seed in DISC_SEEDS:
        spec = GeneratorSpec(
            preset="random",
            seed=seed,
            target_cells=60,
            pentagon_bias=Fraction(1, 2),
        )
        entries.append((f"disc-{seed}", T.generate(spec)))
    return tuple(entries)


@pytest.fixture(scope="module")
def subdivided(corpus):
    return tuple((name, cx, T.subdivide(cx)) for name, cx in corpus)


# ---------------------------------------------------------------------------
# criterion 1: the angle-identity table, exact in integer pi/30 units

def closed_fan(pentagon_count, triangle_count):
    """One vertex ringed by the given cells, so its link is a single cycle."""
    kinds = ["p"] * pentagon_count + ["t"] * triangle_count
    tris, pents = [], []
    nxt = 2
    cur = 1
    for i, kind in enumerate(kinds):
        end = 1 if i == len(kinds) - 1 else None
        if kind == "p":
            a, b = nxt, nxt + 1
            nxt += 2
            if end is None:
                end = nxt
                nxt += 1
            pents.append((0, cur, a, b, end))
        else:
            if end is None:
                end = nxt
                nxt += 1
            tris.append((0, cur, end))
        cur = end
    return T.build_tp_complex(nxt, tris, pents)


def wheel_plus_corner_triangle():
    """A 5-wheel with one corner triangle glued over two rim edges: sum 28."""
    tris = ((0, 1, 4), (0, 1, 5), (0, 4, 5), (1, 2, 5), (2, 3, 5), (3, 4, 5))
    return SimplicialComplex2D(6, tris, center_of=((0, 5),), labels=())


def three_triangles_closed():
    """Three triangles closing around a vertex: sum 30."""
    return SimplicialComplex2D(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3)), (), ())


def two_wheels_sharing_two_spokes():
    """Two 5-wheels whose pentagons share two edges at a corner: sum 36."""
    tris = [(0, 1, 7), (1, 2, 7), (2, 3, 7), (3, 4, 7), (0, 4, 7),
            (0, 1, 8), (1, 5, 8), (5, 6, 8), (4, 6, 8), (0, 4, 8)]
    return T.build_simplicial_complex(9, tris, center_of=[(0, 7), (1, 8)])


def four_triangles_closed():
    """Four triangles closing around a vertex: sum 40."""
    return T.build_simplicial_complex(5, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4)])


# units -> (quoted fraction of pi, pentagons, triangles around the vertex)
ANGLE_TABLE = {
    28: (Fraction(14, 15), 1, 1),
    30: (Fraction(1), 0, 3),
    36: (Fraction(6, 5), 2, 0),
    38: (Fraction(19, 15), 1, 2),
    40: (Fraction(4, 3), 0, 4),
    46: (Fraction(23, 15), 2, 1),
    48: (Fraction(8, 5), 1, 3),
    50: (Fraction(5, 3), 0, 5),
    54: (Fraction(9, 5), 3, 0),
    56: (Fraction(28, 15), 2, 2),
    58: (Fraction(29, 15), 1, 4),
    64: (Fraction(32, 15), 3, 1),
    66: (Fraction(11, 5), 2, 3),
    68: (Fraction(34, 15), 1, 5),
    72: (Fraction(12, 5), 4, 0),
}

# sums whose cell pattern cannot exist in a valid complex, with the error
# the builder raises; the identity is realized on the simplicial side
IMPOSSIBLE_FANS = {
    28: (PentagonChord, wheel_plus_corner_triangle),
    30: (UnfilledTriangleClique, three_triangles_closed),
    36: (SharedEdges, two_wheels_sharing_two_spokes),
    40: (Full4Cycle, four_triangles_closed),
}


def test_criterion_1_angle_identity_table():
    for units, (fraction, p, t) in sorted(ANGLE_TABLE.items()):
        assert units == 18 * p + 10 * t
        assert Fraction(units, 30) == fraction
        if units in IMPOSSIBLE_FANS:
            error, realize = IMPOSSIBLE_FANS[units]
            with pytest.raises(error):
                closed_fan(p, t)
            cx = realize()
        else:
            cx = closed_fan(p, t)
        total = T.vertex_angle_sum(cx, 0)
        assert total.units == units
        assert total.display() == f"{units}·π/30"
        assert T.weighted_link_girth(cx, 0) == units
    print(f"criterion 1: pass ({len(ANGLE_TABLE)} angle sums match exactly)")


# ---------------------------------------------------------------------------
# criterion 2: combinatorial girths after subdivision

def pentagon_side_vertices(sx):
    """Interior vertices that came from a pentagon of the original complex."""
    centers = T.center_vertices(sx)
    return [
        v
        for v in T.interior_vertices(sx)
        if v not in centers and sx.adjacency[v] & centers
    ]


def test_criterion_2_girths(subdivided):
    by_name = {name: sx for name, _, sx in subdivided}
    assert T.combinatorial_girth(by_name["star4"], 0) == 8
    for name in ("fan3", "fan2", "fan1"):
        assert T.combinatorial_girth(by_name[name], 0) == 7
    checked = 0
    for seed in DISC_SEEDS:
        sx = by_name[f"disc-{seed}"]
        for v in pentagon_side_vertices(sx):
            assert T.combinatorial_girth(sx, v) >= 7
            checked += 1
    assert checked > 100
    print(f"criterion 2: pass (preset girths 8/7/7/7, {checked} disc vertices >= 7)")


# ---------------------------------------------------------------------------
# criterion 3: flagness and local largeness of every subdivision

def unfilled_cliques(sx):
    tri_set = set(sx.triangles)
    bad = []
    for a, b in sx.edges:
        for c in sx.adjacency[a] & sx.adjacency[b]:
            if tuple(sorted((a, b, c))) not in tri_set:
                bad.append(tuple(sorted((a, b, c))))
    return bad


def test_criterion_3_locally_large_subdivisions(subdivided):
    girth5_centers = 0
    for name, _, sx in subdivided:
        assert unfilled_cliques(sx) == [], name
        assert T.is_locally_k_large(sx, 5).ok, name
        for v in T.interior_vertices(sx):
            g = T.link_girth(sx, v)
            assert g not in (3, 4), (name, v)
            if g == 5:
                assert T.is_center(sx, v), (name, v)
                girth5_centers += 1
    assert girth5_centers > 100
    print(
        "criterion 3: pass (all subdivisions flag and locally 5-large, "
        f"{girth5_centers} girth-5 vertices all centers)"
    )


# ---------------------------------------------------------------------------
# criterion 4: 7-location with no qualifying dwheels

def test_criterion_4_location(subdivided, dwheel_control):
    for name, _, sx in subdivided:
        report = T.is_m_located(sx, 7)
        assert report.verdict == "located", name
        assert report.dwheels_found == (), name
    control = T.is_m_located(dwheel_control, 7)
    assert control.verdict == "violated"
    assert len(control.violating) == 1
    print(
        f"criterion 4: pass ({len(subdivided)} instances located(7) with "
        "no dwheel witnesses; negative control violated)"
    )


# ---------------------------------------------------------------------------
# criterion 5: the 5/8-condition, with its first clause never triggered

def test_criterion_5_five_eight(subdivided):
    for name, _, sx in subdivided:
        report = T.check_58_condition(sx)
        assert report.ok, name
        assert report.clause_58.status == "vacuous", name
        assert report.clause_67.status in ("vacuous", "pass"), name
    print(f"criterion 5: pass (5/8-condition holds on {len(subdivided)} instances)")


# ---------------------------------------------------------------------------
# criterion 6: CAT(0) before and after subdivision, flat centers

def test_criterion_6_cat0_and_subdivision_angles(subdivided):
    for name, cx, sx in subdivided:
        assert T.is_cat0_disc(cx).ok, name
        assert T.is_cat0_disc(sx).ok, name
        for c in T.center_vertices(sx):
            assert T.vertex_angle_sum(sx, c).units == 60, (name, c)
        for v in range(cx.vertex_count):
            assert T.vertex_angle_sum(cx, v) == T.vertex_angle_sum(sx, v), (name, v)
    print(f"criterion 6: pass ({len(subdivided)} instances CAT(0) in X and X★)")


# ---------------------------------------------------------------------------
# criterion 7: enumerators agree with brute-force oracles

def petersen():
    adj = {v: set() for v in range(10)}
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def test_criterion_7_oracle_equivalence(presets, subdivided, dwheel_control):
    small_complexes = [
        dwheel_control,
        T.subdivide(T.build_tp_complex(5, (), [(0, 1, 2, 3, 4)])),
        T.subdivide(T.build_tp_complex(8, (), [(0, 1, 2, 3, 4), (0, 4, 5, 6, 7)])),
        T.gen_triangle_tiling(1),
        two_wheels_sharing_two_spokes(),
        four_triangles_closed(),
    ]
    for name, _, sx in subdivided:
        if sx.vertex_count <= 30:
            small_complexes.append(sx)

    graphs = [petersen()]
    for cx in list(presets.values()) + small_complexes:
        if cx.vertex_count <= 14:
            graphs.append({v: cx.adjacency[v] for v in range(cx.vertex_count)})
        for v in range(cx.vertex_count):
            link = T.link_of(cx, v).adjacency()
            if len(link) <= 14:
                graphs.append(link)

    cycle_graphs = 0
    for adj in graphs:
        got = {c.vertices for c in T.enumerate_induced_cycles(adj, len(adj))}
        assert got == subset_induced_cycles(adj, len(adj))
        cycle_graphs += 1

    girth_links = 0
    for cx in small_complexes + list(presets.values()):
        for v in range(cx.vertex_count):
            link = T.link_of(cx, v)
            if len(link.nodes) > 12:
                continue
            oracle = exhaustive_weighted_girth(link.weighted_adjacency())
            assert T.weighted_link_girth(cx, v) == oracle
            girth_links += 1

    dwheel_complexes = 0
    for sx in small_complexes:
        got = {w.key() for w in T.enumerate_dwheels(sx, max_boundary=9)}
        assert got == brute_dwheel_orbits(sx, max_boundary=9)
        dwheel_complexes += 1

    print(
        f"criterion 7: pass (oracles agree on {cycle_graphs} graphs, "
        f"{girth_links} links, {dwheel_complexes} complexes)"
    )


# ---------------------------------------------------------------------------
# criterion 8: every dwheel in the corpus is planar

def test_criterion_8_no_nonplanar_dwheels(subdivided):
    seen = 0
    for name, _, sx in subdivided:
        for w in T.enumerate_dwheels(sx, max_boundary=9):
            assert w.kind == "planar", (name, w)
            seen += 1
    assert seen > 1000
    print(f"criterion 8: pass ({seen} dwheel witnesses, all planar)")


# ---------------------------------------------------------------------------
# criterion 9: byte-identical determinism

def test_criterion_9_determinism(tmp_path):
    spec = GeneratorSpec(
        preset="random", seed=42, target_cells=60, pentagon_bias=Fraction(1, 2)
    )
    first, second = T.generate(spec), T.generate(spec)
    assert first == second
    assert T.serialize(first) == T.serialize(second)

    sx = T.subdivide(first)
    assert T.serialize(T.parse(T.serialize(sx))) == T.serialize(sx)
    assert T.export_dot(sx) == T.export_dot(sx)
    assert T.check_link_condition(sx, parallel=4) == T.check_link_condition(sx)
    assert T.is_m_located(sx, 7) == T.is_m_located(sx, 7)

    path = tmp_path / "disc.json"
    path.write_bytes(T.serialize(first))
    reports = []
    for i, par in enumerate(("1", "4", "1")):
        out = tmp_path / f"report-{i}.json"
        code = T.run_cli(
            ["check", str(path), "--all", "--parallel", par, "--json", str(out)]
        )
        assert code == 0
        reports.append(out.read_bytes())
    assert reports[0] == reports[1] == reports[2]
    print("criterion 9: pass (generators, checks, and reports byte-identical)")

"""Combinatorial curvature checkers on flag complexes.

Link girth and local k-largeness, wheels and dwheels, m-location, the two
neighbor-largeness clauses, and the combinatorial girth of a vertex.  All
enumerations are deterministic: results come out sorted in canonical form,
independent of traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf

from .complex_core import (
    AnyComplex,
    VertexCycle,
    _unfilled_clique,
    edge_key,
    enumerate_induced_cycles,
    is_full_cycle,
    link_of,
)
from .errors import InvalidIndex, NotFlag, ValidationError


def link_girth(cx: AnyComplex, v: int) -> int | float:
    """Length of the shortest full cycle in the link of v; inf if acyclic.

    In a one-dimensional link every chordless cycle counts as full, 3-cycles
    included, so this is the graph girth of the link.  A vertex the text
    would call "k-large but not (k+1)-large" has link girth exactly k.
    """
    link = link_of(cx, v)
    adj = link.adjacency()
    cycles = enumerate_induced_cycles(adj, max_len=max(len(adj), 3))
    if not cycles:
        return inf
    return len(cycles[0])


@dataclass(frozen=True)
class LargenessViolation:
    vertex: int
    cycle: VertexCycle


@dataclass(frozen=True)
class LargenessReport:
    k: int
    ok: bool
    violations: tuple[LargenessViolation, ...]


def is_locally_k_large(cx: AnyComplex, k: int) -> LargenessReport:
    """Check that every vertex link has girth at least k (acyclic passes).

    Each violating vertex is reported with a shortest chordless link cycle
    as witness.
    """
    if k < 4:
        raise ValidationError(f"local largeness needs k >= 4, got {k}")
    violations = []
    for v in range(cx.vertex_count):
        adj = link_of(cx, v).adjacency()
        short = enumerate_induced_cycles(adj, max_len=k - 1)
        if short:
            violations.append(LargenessViolation(v, short[0]))
    return LargenessReport(k, not violations, tuple(violations))


@dataclass(frozen=True)
class Wheel:
    """A hub adjacent to every vertex of a full cycle (its rim)."""

    hub: int
    rim: VertexCycle

    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        vs = self.rim.vertices
        n = len(vs)
        return tuple(
            tuple(sorted((self.hub, vs[i], vs[(i + 1) % n]))) for i in range(n)
        )

    def edges(self) -> frozenset[tuple[int, int]]:
        spokes = frozenset(edge_key(self.hub, u) for u in self.rim.vertices)
        return spokes | frozenset(self.rim.edges())

    def vertices(self) -> frozenset[int]:
        return frozenset(self.rim.vertices) | {self.hub}


def enumerate_wheels(cx: AnyComplex, max_rim: int) -> list[Wheel]:
    """All wheels with rim length 4..max_rim, sorted by (hub, rim).

    A rim must be a chordless cycle in the hub's link whose vertex set is
    moreover full in the ambient complex.
    """
    if max_rim < 4:
        raise ValidationError(f"wheel rims have length >= 4, got max_rim {max_rim}")
    wheels = []
    for hub in range(cx.vertex_count):
        adj = link_of(cx, hub).adjacency()
        for cycle in enumerate_induced_cycles(adj, max_len=max_rim):
            if len(cycle) >= 4 and is_full_cycle(cx, cycle):
                wheels.append(Wheel(hub, cycle))
    wheels.sort(key=lambda w: (w.hub, len(w.rim), w.rim.vertices))
    return wheels


def wheel_is_full(cx: AnyComplex, wheel: Wheel) -> bool:
    """Re-validate a wheel: hub adjacent to the whole rim, rim a full cycle."""
    if any(u not in cx.adjacency[wheel.hub] for u in wheel.rim.vertices):
        return False
    return is_full_cycle(cx, wheel.rim)


@dataclass(frozen=True)
class DwheelWitness:
    """Two full wheels overlapping per the dwheel pattern.

    wheel1 is (wl; v1, v2, v3, ..., vk) and wheel2 is (v2; w1, ..., wl):
    each hub lies on the other wheel's rim, and v3 = w(l-1).  The witness is
    planar when v1 = w1 and nonplanar when v1 and w1 are merely adjacent.
    """

    wheel1: Wheel
    wheel2: Wheel
    kind: str
    v1: int
    v2: int
    v3: int
    w1: int
    wl: int
    boundary_length: int
    containing_vertex: int | None

    def key(self) -> tuple:
        return (
            self.kind,
            self.wheel1.hub,
            self.wheel1.rim.vertices,
            self.wheel2.hub,
            self.wheel2.rim.vertices,
            self.v1,
            self.v2,
            self.v3,
            self.w1,
            self.wl,
        )


def _alignment_key(kind, wheel1, wheel2, v1, v2, v3, w1, wl) -> tuple:
    return (
        kind,
        wheel1.hub,
        wheel1.rim.vertices,
        wheel2.hub,
        wheel2.rim.vertices,
        v1,
        v2,
        v3,
        w1,
        wl,
    )


def _orbit_keys(kind, wheel1, wheel2, v1, v2, v3, w1, wl) -> list[tuple]:
    """Keys of all alignments describing the same dwheel.

    Swapping the two wheels maps (v1, v2, v3, w1, wl) to (w1, wl, v3, v1, v2);
    a planar dwheel additionally has the mirror (v3, v2, v1, v3, wl).
    """
    keys = [
        _alignment_key(kind, wheel1, wheel2, v1, v2, v3, w1, wl),
        _alignment_key(kind, wheel2, wheel1, w1, wl, v3, v1, v2),
    ]
    if kind == "planar":
        keys.append(_alignment_key(kind, wheel1, wheel2, v3, v2, v1, v3, wl))
        keys.append(_alignment_key(kind, wheel2, wheel1, v3, wl, v1, v3, v2))
    return keys


def _dwheel_simplices(wheel1: Wheel, wheel2: Wheel):
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    tris: set[tuple[int, int, int]] = set()
    for wheel in (wheel1, wheel2):
        verts |= wheel.vertices()
        edges |= wheel.edges()
        tris |= set(wheel.triangles())
    return verts, edges, tris


def _containing_vertex(cx: AnyComplex, wheel1: Wheel, wheel2: Wheel) -> int | None:
    """First vertex u such that every dwheel simplex spans a simplex with u.

    A triangle not containing u would have to span a 3-simplex with it,
    which a 2-dimensional complex never has, so in practice the search only
    succeeds for degenerate configurations.
    """
    verts, edges, tris = _dwheel_simplices(wheel1, wheel2)
    for u in range(cx.vertex_count):
        if any(u != v and v not in cx.adjacency[u] for v in verts):
            continue
        if any(
            u not in (a, b) and tuple(sorted((u, a, b))) not in cx.triangle_set
            for a, b in edges
        ):
            continue
        if any(u not in t for t in tris):
            continue
        return u
    return None


def enumerate_dwheels(cx: AnyComplex, max_boundary: int) -> list[DwheelWitness]:
    """All dwheels with boundary length <= max_boundary.

    Every ordered pair of full wheels is aligned in both rim orientations;
    alignments describing the same dwheel (wheel swap, and the mirror in the
    planar case) are deduplicated to one canonical witness.
    """
    wheels = enumerate_wheels(cx, max_rim=max(max_boundary, 4))
    adjacency = cx.adjacency
    found: dict[tuple, DwheelWitness] = {}
    for wheel1 in wheels:
        rim_a = wheel1.rim.vertices
        k = len(rim_a)
        for wheel2 in wheels:
            rim_b = wheel2.rim.vertices
            l = len(rim_b)
            if wheel2.hub not in rim_a or wheel1.hub not in rim_b:
                continue
            i = rim_a.index(wheel2.hub)
            around_v2 = (rim_a[(i - 1) % k], rim_a[(i + 1) % k])
            j = rim_b.index(wheel1.hub)
            around_wl = (rim_b[(j - 1) % l], rim_b[(j + 1) % l])
            for v1, v3 in (around_v2, around_v2[::-1]):
                if v3 not in around_wl:
                    continue
                w1 = around_wl[0] if around_wl[1] == v3 else around_wl[1]
                if v1 == w1:
                    kind = "planar"
                    boundary = k + l - 4
                elif w1 in adjacency[v1]:
                    kind = "nonplanar"
                    boundary = k + l - 3
                else:
                    continue
                if boundary > max_boundary:
                    continue
                args = (kind, wheel1, wheel2, v1, wheel2.hub, v3, w1, wheel1.hub)
                keys = _orbit_keys(*args)
                canon = min(keys)
                if canon in found and keys[0] != canon:
                    continue
                found[canon] = DwheelWitness(
                    wheel1=wheel1,
                    wheel2=wheel2,
                    kind=kind,
                    v1=v1,
                    v2=wheel2.hub,
                    v3=v3,
                    w1=w1,
                    wl=wheel1.hub,
                    boundary_length=boundary,
                    containing_vertex=_containing_vertex(cx, wheel1, wheel2),
                )
    return [found[key] for key in sorted(found)]


@dataclass(frozen=True)
class LocationReport:
    m: int
    dwheels_found: tuple[DwheelWitness, ...]
    violating: tuple[DwheelWitness, ...]
    verdict: str  # located | violated


def is_m_located(cx: AnyComplex, m: int) -> LocationReport:
    """Decide m-location: every qualifying dwheel must lie in a vertex link.

    Qualifying means boundary length <= m with both wheels full; flagness is
    re-verified first and a non-flag complex is rejected with NotFlag.
    """
    if m < 4:
        raise ValidationError(f"location needs m >= 4, got {m}")
    clique = _unfilled_clique(cx)
    if clique is not None:
        raise NotFlag(clique)
    witnesses = enumerate_dwheels(cx, max_boundary=m)
    violating = tuple(
        w
        for w in witnesses
        if w.boundary_length <= m
        and wheel_is_full(cx, w.wheel1)
        and wheel_is_full(cx, w.wheel2)
        and w.containing_vertex is None
    )
    verdict = "located" if not violating else "violated"
    return LocationReport(m, tuple(witnesses), violating, verdict)


@dataclass(frozen=True)
class NeighborLargenessWitness:
    vertex: int
    girth: int | float
    neighbor: int
    neighbor_girth: int | float


@dataclass(frozen=True)
class ClauseRecord:
    name: str
    status: str  # pass | fail | vacuous
    witnesses: tuple[NeighborLargenessWitness, ...]


@dataclass(frozen=True)
class FiveEightReport:
    clause_58: ClauseRecord
    clause_67: ClauseRecord
    ok: bool


def check_58_condition(cx: AnyComplex) -> FiveEightReport:
    """The two neighbor-largeness clauses, each reported separately.

    Clause 5/8: neighbors of link-girth-4 vertices have link girth >= 8.
    Clause 6/7: neighbors of link-girth-5 vertices have link girth >= 7.
    A clause with no trigger vertices is vacuous.
    """
    girths = {v: link_girth(cx, v) for v in range(cx.vertex_count)}

    def clause(name: str, trigger: int, bound: int) -> ClauseRecord:
        triggers = [v for v in sorted(girths) if girths[v] == trigger]
        witnesses = []
        for v in triggers:
            for u in sorted(cx.adjacency[v]):
                if girths[u] < bound:
                    witnesses.append(
                        NeighborLargenessWitness(v, girths[v], u, girths[u])
                    )
        status = "vacuous" if not triggers else ("fail" if witnesses else "pass")
        return ClauseRecord(name, status, tuple(witnesses))

    clause_58 = clause("5/8", trigger=4, bound=8)
    clause_67 = clause("6/7", trigger=5, bound=7)
    ok = clause_58.status != "fail" and clause_67.status != "fail"
    return FiveEightReport(clause_58, clause_67, ok)


def combinatorial_girth(cx: AnyComplex, v: int) -> int:
    """Number of edges in the link of v."""
    if not 0 <= v < cx.vertex_count:
        raise InvalidIndex(v, cx.vertex_count, "combinatorial_girth")
    link = link_of(cx, v)
    return len({edge_key(e.a, e.b) for e in link.edges})

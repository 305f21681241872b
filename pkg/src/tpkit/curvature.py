"""Angle sums, weighted link girth, and the nonpositive-curvature check.

Every corner carries an integer weight in units of pi/30 (see ``angles``),
so all comparisons here are exact integer arithmetic.  A complex is a CAT(0)
disc when it is a disc topologically and every interior vertex satisfies the
link condition: every simple cycle in its link has total weight at least one
full turn (60 units, i.e. 2*pi).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .angles import FULL_TURN, AngleWeight
from .complex_core import (
    AnyComplex,
    boundary_cycles,
    dijkstra_avoiding,
    edge_key,
    euler_characteristic,
    interior_vertices,
    is_connected,
    link_of,
)
from .errors import VertexNotInCell


def corner_angle(cx: AnyComplex, cell_index: int, v: int) -> AngleWeight:
    """Angle contributed to v by one incident 2-cell."""
    _, cell = cx.two_cells[cell_index]
    if v not in cell:
        raise VertexNotInCell(v, cell)
    units, _ = cx.corner_units(cell_index, v)
    return AngleWeight(units)


def vertex_angle_sum(cx: AnyComplex, v: int) -> AngleWeight:
    """Total angle around v, summed over all incident 2-cells."""
    total = 0
    for idx in cx.vertex_cells[v]:
        units, _ = cx.corner_units(idx, v)
        total += units
    return AngleWeight(total)


def weighted_link_girth(cx: AnyComplex, v: int) -> int | None:
    """Minimum total weight of a simple cycle in the link of v, in units.

    None when the link is acyclic.  Computed edge by edge: the lightest
    cycle through a link edge is that edge plus the lightest path between
    its endpoints that avoids it.
    """
    link = link_of(cx, v)
    wadj = link.weighted_adjacency()
    best: int | None = None
    for e in link.edges:
        through = dijkstra_avoiding(wadj, e.a, e.b, edge_key(e.a, e.b))
        if through is None:
            continue
        total = through + e.weight.units
        if best is None or total < best:
            best = total
    return best


@dataclass(frozen=True)
class VertexLinkRecord:
    vertex: int
    interior: bool
    angle_units: int
    girth_units: int | None
    satisfied: bool


@dataclass(frozen=True)
class LinkConditionReport:
    records: tuple[VertexLinkRecord, ...]
    ok: bool

    @property
    def failures(self) -> tuple[int, ...]:
        return tuple(r.vertex for r in self.records if not r.satisfied)


def _link_record(cx: AnyComplex, v: int, interior: frozenset[int]) -> VertexLinkRecord:
    girth = weighted_link_girth(cx, v)
    inside = v in interior
    satisfied = (not inside) or (girth is not None and girth >= FULL_TURN.units)
    return VertexLinkRecord(
        vertex=v,
        interior=inside,
        angle_units=vertex_angle_sum(cx, v).units,
        girth_units=girth,
        satisfied=satisfied,
    )


def check_link_condition(cx: AnyComplex, parallel: int = 1) -> LinkConditionReport:
    """Evaluate the link condition at every vertex incident to a 2-cell.

    Boundary vertices are exempt and always satisfy the condition; their
    records are still reported.  ``parallel`` > 1 fans the per-vertex work
    over a thread pool; the assembled report is identical either way.
    """
    interior = interior_vertices(cx)
    verts = [v for v in range(cx.vertex_count) if cx.vertex_cells[v]]
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            records = list(pool.map(lambda v: _link_record(cx, v, interior), verts))
    else:
        records = [_link_record(cx, v, interior) for v in verts]
    records.sort(key=lambda r: r.vertex)
    return LinkConditionReport(tuple(records), all(r.satisfied for r in records))


@dataclass(frozen=True)
class DiscVerdict:
    ok: bool
    reasons: tuple[str, ...]
    connected: bool
    euler: int
    boundary_count: int
    link_report: LinkConditionReport


def is_cat0_disc(cx: AnyComplex, parallel: int = 1) -> DiscVerdict:
    """Decide whether the complex is a CAT(0) disc.

    Four independent conditions are checked and every failing one is named
    in ``reasons``: "disconnected", "euler-characteristic" (chi != 1),
    "not-a-disc" (boundary is not a single cycle), and "link-condition".
    """
    reasons = []
    connected = is_connected(cx)
    if not connected:
        reasons.append("disconnected")
    euler = euler_characteristic(cx)
    if euler != 1:
        reasons.append("euler-characteristic")
    cycles = boundary_cycles(cx)
    if len(cycles) != 1:
        reasons.append("not-a-disc")
    report = check_link_condition(cx, parallel=parallel)
    if not report.ok:
        reasons.append("link-condition")
    return DiscVerdict(
        ok=not reasons,
        reasons=tuple(reasons),
        connected=connected,
        euler=euler,
        boundary_count=len(cycles),
        link_report=report,
    )

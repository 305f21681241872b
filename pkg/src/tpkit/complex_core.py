"""Triangle-pentagon complexes and their derived combinatorial structure.

Two cell-complex kinds live here.  ``TPComplex`` is a 2-dimensional complex
whose 2-cells are triangles and chord-free pentagons over a shared
1-skeleton.  ``SimplicialComplex2D`` is a flag 2-dimensional simplicial
complex, optionally carrying markers for vertices that were introduced as
pentagon centers.

Both kinds are immutable after construction.  Use :func:`build_tp_complex`
and :func:`build_simplicial_complex`, which canonicalize the cell lists and
enforce every structural invariant; the raw dataclass constructors perform no
checking.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import inf
from typing import Iterable, Mapping, Sequence

from .angles import (
    AngleWeight,
    PENTAGON_CORNER,
    TRIANGLE_CORNER,
    WHEEL_APEX_CORNER,
    WHEEL_RIM_CORNER,
)
from .errors import (
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
)

Vertex = int
Edge = tuple[int, int]
Triangle = tuple[int, int, int]
Pentagon = tuple[int, int, int, int, int]


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically minimal rotation/reflection of a cyclic sequence."""
    vs = tuple(seq)
    n = len(vs)
    best = None
    for base in (vs, vs[::-1]):
        for r in range(n):
            cand = base[r:] + base[:r]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class VertexCycle:
    """A simple cycle stored in canonical form (minimal rotation/reflection)."""

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "VertexCycle":
        vs = tuple(seq)
        if len(vs) < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"cycle repeats a vertex: {vs}")
        return cls(canonical_cycle(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        n = len(vs)
        return tuple(edge_key(vs[i], vs[(i + 1) % n]) for i in range(n))


@dataclass(frozen=True)
class LinkEdge:
    a: int
    b: int
    weight: AngleWeight
    tag: str  # triangle-corner | pentagon-corner | wheel-rim-corner | wheel-apex-corner


@dataclass(frozen=True)
class LinkGraph:
    """The link of a vertex: its neighbors, joined once per incident 2-cell.

    Each edge carries the corner weight of the 2-cell at the link's center.
    """

    center: int
    nodes: tuple[int, ...]
    edges: tuple[LinkEdge, ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.nodes}
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        return adj

    def weighted_adjacency(self) -> dict[int, list[tuple[int, int]]]:
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.nodes}
        for e in self.edges:
            adj[e.a].append((e.b, e.weight.units))
            adj[e.b].append((e.a, e.weight.units))
        return adj

    def total_units(self) -> int:
        return sum(e.weight.units for e in self.edges)


class _CellComplexOps:
    """Derived structure shared by both complex kinds."""

    vertex_count: int

    @property
    def two_cells(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        raise NotImplementedError

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        es: set[Edge] = set()
        for _, cell in self.two_cells:
            n = len(cell)
            for i in range(n):
                es.add(edge_key(cell[i], cell[(i + 1) % n]))
        return tuple(sorted(es))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return edge_key(a, b) in self.edge_set

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(self.vertex_count)}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def edge_cells(self) -> dict[Edge, tuple[int, ...]]:
        """Edge -> indices into two_cells of the incident 2-cells."""
        out: dict[Edge, list[int]] = {}
        for idx, (_, cell) in enumerate(self.two_cells):
            n = len(cell)
            for i in range(n):
                out.setdefault(edge_key(cell[i], cell[(i + 1) % n]), []).append(idx)
        return {e: tuple(cs) for e, cs in out.items()}

    @cached_property
    def vertex_cells(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.vertex_count)}
        for idx, (_, cell) in enumerate(self.two_cells):
            for v in cell:
                out[v].append(idx)
        return {v: tuple(cs) for v, cs in out.items()}

    def corner_neighbors(self, cell_index: int, v: int) -> tuple[int, int]:
        """The two vertices adjacent to v along the boundary of a 2-cell."""
        _, cell = self.two_cells[cell_index]
        i = cell.index(v)
        n = len(cell)
        return cell[(i - 1) % n], cell[(i + 1) % n]

    def corner_units(self, cell_index: int, v: int) -> tuple[int, str]:
        raise NotImplementedError


@dataclass(frozen=True)
class TPComplex(_CellComplexOps):
    """A 2-complex with triangle and pentagon 2-cells.

    Triangles are stored as sorted triples, pentagons as canonical cyclic
    5-sequences; both tuples are sorted.  ``labels`` optionally names
    vertices and is carried through serialization untouched.
    """

    vertex_count: int
    triangles: tuple[Triangle, ...]
    pentagons: tuple[Pentagon, ...]
    labels: tuple[tuple[int, str], ...] = ()

    kind = "tpc"

    @cached_property
    def two_cells(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        cells = [("triangle", t) for t in self.triangles]
        cells += [("pentagon", p) for p in self.pentagons]
        return tuple(cells)

    @cached_property
    def triangle_set(self) -> frozenset[Triangle]:
        return frozenset(self.triangles)

    def corner_units(self, cell_index: int, v: int) -> tuple[int, str]:
        kind, _ = self.two_cells[cell_index]
        if kind == "triangle":
            return TRIANGLE_CORNER.units, "triangle-corner"
        return PENTAGON_CORNER.units, "pentagon-corner"


@dataclass(frozen=True)
class SimplicialComplex2D(_CellComplexOps):
    """A flag 2-dimensional simplicial complex.

    ``center_of`` maps pentagon index -> center vertex for complexes obtained
    by star subdivision; it is empty for ordinary simplicial complexes.
    """

    vertex_count: int
    triangles: tuple[Triangle, ...]
    center_of: tuple[tuple[int, int], ...] = ()
    labels: tuple[tuple[int, str], ...] = ()

    kind = "tps"

    @cached_property
    def two_cells(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        return tuple(("triangle", t) for t in self.triangles)

    @cached_property
    def triangle_set(self) -> frozenset[Triangle]:
        return frozenset(self.triangles)

    @cached_property
    def center_set(self) -> frozenset[int]:
        return frozenset(c for _, c in self.center_of)

    def is_center(self, v: int) -> bool:
        return v in self.center_set

    def vertex_origin(self, v: int) -> str:
        return "center" if v in self.center_set else "original"

    def corner_units(self, cell_index: int, v: int) -> tuple[int, str]:
        _, cell = self.two_cells[cell_index]
        centers = self.center_set & set(cell)
        if not centers:
            return TRIANGLE_CORNER.units, "triangle-corner"
        if v in centers:
            return WHEEL_APEX_CORNER.units, "wheel-apex-corner"
        return WHEEL_RIM_CORNER.units, "wheel-rim-corner"


AnyComplex = TPComplex | SimplicialComplex2D


# ---------------------------------------------------------------------------
# construction and validation


def _check_vertex(v, vertex_count: int, where: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < vertex_count:
        raise InvalidIndex(v, vertex_count, where)
    return v


def _canon_labels(labels, vertex_count: int) -> tuple[tuple[int, str], ...]:
    out = []
    for v, text in dict(labels).items():
        _check_vertex(v, vertex_count, "labels")
        out.append((v, str(text)))
    return tuple(sorted(out))


def _canon_triangles(vertex_count: int, triangles) -> tuple[Triangle, ...]:
    seen: set[Triangle] = set()
    out: list[Triangle] = []
    for raw in triangles:
        cell = tuple(raw)
        for v in cell:
            _check_vertex(v, vertex_count, f"triangle {cell}")
        if len(cell) != 3 or len(set(cell)) != 3:
            raise DegenerateCell(cell)
        tri = tuple(sorted(cell))
        if tri in seen:
            raise DuplicateCell(tri)
        seen.add(tri)
        out.append(tri)
    return tuple(sorted(out))


def _canon_pentagons(vertex_count: int, pentagons) -> tuple[Pentagon, ...]:
    seen: set[Pentagon] = set()
    out: list[Pentagon] = []
    for raw in pentagons:
        cell = tuple(raw)
        for v in cell:
            _check_vertex(v, vertex_count, f"pentagon {cell}")
        if len(cell) != 5 or len(set(cell)) != 5:
            raise DegenerateCell(cell)
        pent = canonical_cycle(cell)
        if pent in seen:
            raise DuplicateCell(pent)
        seen.add(pent)
        out.append(pent)
    return tuple(sorted(out))


def _check_pentagon_chords(cx: TPComplex) -> None:
    for pent in cx.pentagons:
        for i in range(5):
            for j in range(i + 1, 5):
                if (j - i) % 5 in (1, 4):
                    continue  # consecutive, a boundary edge
                if cx.has_edge(pent[i], pent[j]):
                    raise PentagonChord(pent, edge_key(pent[i], pent[j]))


def _find_induced_4cycle(adjacency: Mapping[int, frozenset[int]]) -> tuple[int, ...] | None:
    # Only vertex pairs joined by a 2-path can be opposite corners of a
    # 4-cycle, so walk those instead of all vertex pairs.
    for u in sorted(adjacency):
        two_step: dict[int, list[int]] = {}
        for x in adjacency[u]:
            for w in adjacency[x]:
                if w > u and w not in adjacency[u]:
                    two_step.setdefault(w, []).append(x)
        for w in sorted(two_step):
            common = sorted(two_step[w])
            for i, a in enumerate(common):
                for b in common[i + 1:]:
                    if b not in adjacency[a]:
                        return (u, a, w, b)
    return None


def _check_no_induced_4cycles(cx: _CellComplexOps) -> None:
    cyc = _find_induced_4cycle(cx.adjacency)
    if cyc is not None:
        raise Full4Cycle(cyc)


def _unfilled_clique(cx: _CellComplexOps) -> tuple[int, int, int] | None:
    adj = cx.adjacency
    tris = cx.triangle_set
    for a, b in cx.edges:
        for c in sorted(adj[a] & adj[b]):
            if tuple(sorted((a, b, c))) not in tris:
                return tuple(sorted((a, b, c)))
    return None


def _check_cliques_filled(cx: TPComplex) -> None:
    clique = _unfilled_clique(cx)
    if clique is not None:
        raise UnfilledTriangleClique(clique)


def _check_cell_intersections(cx: _CellComplexOps) -> None:
    # An edge in three or more cells is out of scope; two cells sharing two
    # or more edges would make links into multigraphs, so that is rejected too.
    pair_shared: dict[tuple[int, int], int] = {}
    for edge, cells in cx.edge_cells.items():
        if len(cells) > 2:
            raise NonManifoldEdge(edge, len(cells))
        if len(cells) == 2:
            key = (cells[0], cells[1])
            pair_shared[key] = pair_shared.get(key, 0) + 1
    for (ci, cj), count in sorted(pair_shared.items()):
        if count >= 2:
            shared = sorted(
                e for e, cs in cx.edge_cells.items() if set((ci, cj)) <= set(cs)
            )
            raise SharedEdges(cx.two_cells[ci][1], cx.two_cells[cj][1], shared)


def build_tp_complex(
    vertex_count: int,
    triangles: Iterable[Sequence[int]],
    pentagons: Iterable[Sequence[int]] = (),
    labels: Mapping[int, str] | Iterable[tuple[int, str]] = (),
) -> TPComplex:
    """Canonicalize and validate a triangle-pentagon cell list.

    Raises a ValidationError subclass naming the first violated invariant:
    bad indices, degenerate or duplicate cells, a pentagon chord, an induced
    4-cycle, an edge in three or more cells, two cells sharing two edges, or
    an unfilled 3-clique.
    """
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise ValidationError(f"vertex_count must be a nonnegative int, got {vertex_count!r}")
    cx = TPComplex(
        vertex_count,
        _canon_triangles(vertex_count, triangles),
        _canon_pentagons(vertex_count, pentagons),
        _canon_labels(labels, vertex_count),
    )
    _check_pentagon_chords(cx)
    _check_no_induced_4cycles(cx)
    _check_cell_intersections(cx)
    _check_cliques_filled(cx)
    return cx


def _find_4clique(adjacency: Mapping[int, frozenset[int]], edges) -> tuple[int, ...] | None:
    for a, b in edges:
        common = sorted(adjacency[a] & adjacency[b])
        for i, c in enumerate(common):
            for d in common[i + 1:]:
                if d in adjacency[c]:
                    return tuple(sorted((a, b, c, d)))
    return None


def build_simplicial_complex(
    vertex_count: int,
    triangles: Iterable[Sequence[int]],
    center_of: Iterable[tuple[int, int]] = (),
    labels: Mapping[int, str] | Iterable[tuple[int, str]] = (),
) -> SimplicialComplex2D:
    """Canonicalize and validate a flag 2-dimensional simplicial complex.

    Flagness (every 3-clique spans a triangle) and 2-dimensionality (no
    4-clique) are enforced; violations raise FlagViolation.  Center markers
    must be distinct, in range, and pairwise non-adjacent so that corner
    weights stay well defined.
    """
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise ValidationError(f"vertex_count must be a nonnegative int, got {vertex_count!r}")
    cx = SimplicialComplex2D(
        vertex_count,
        _canon_triangles(vertex_count, triangles),
        _canon_centers(center_of, vertex_count),
        _canon_labels(labels, vertex_count),
    )
    clique = _unfilled_clique(cx)
    if clique is not None:
        raise FlagViolation(clique, "unfilled-clique")
    four = _find_4clique(cx.adjacency, cx.edges)
    if four is not None:
        raise FlagViolation(four, "four-clique")
    _check_cell_intersections(cx)
    for i, (_, ci) in enumerate(cx.center_of):
        for _, cj in cx.center_of[i + 1:]:
            if cj in cx.adjacency[ci]:
                raise ValidationError(f"center vertices {ci} and {cj} are adjacent")
    return cx


def _canon_centers(center_of, vertex_count: int) -> tuple[tuple[int, int], ...]:
    pairs = sorted(tuple(center_of))
    seen_idx: set[int] = set()
    seen_v: set[int] = set()
    for idx, v in pairs:
        if not isinstance(idx, int) or idx < 0:
            raise ValidationError(f"pentagon index {idx!r} must be a nonnegative int")
        _check_vertex(v, vertex_count, "centers")
        if idx in seen_idx:
            raise ValidationError(f"pentagon index {idx} has two centers")
        if v in seen_v:
            raise ValidationError(f"vertex {v} marked as center twice")
        seen_idx.add(idx)
        seen_v.add(v)
    return tuple(pairs)


# ---------------------------------------------------------------------------
# links, fullness, cycles


def link_of(cx: AnyComplex, v: int) -> LinkGraph:
    """Link of a vertex, one weighted edge per incident 2-cell corner."""
    _check_vertex(v, cx.vertex_count, "link_of")
    edges = []
    for idx in cx.vertex_cells[v]:
        left, right = cx.corner_neighbors(idx, v)
        a, b = edge_key(left, right)
        units, tag = cx.corner_units(idx, v)
        edges.append(LinkEdge(a, b, AngleWeight(units), tag))
    edges.sort(key=lambda e: (e.a, e.b, e.tag))
    return LinkGraph(center=v, nodes=tuple(sorted(cx.adjacency[v])), edges=tuple(edges))


def is_full_subcomplex(cx: AnyComplex, vertex_set: Iterable[int]) -> bool:
    """True iff the span of the vertex set adds no 2-cell.

    The 1-skeleton induced on the set is taken as given; the span is larger
    exactly when some 2-cell of the complex has all its vertices in the set.
    """
    vs = set(vertex_set)
    for v in vs:
        _check_vertex(v, cx.vertex_count, "is_full_subcomplex")
    for _, cell in cx.two_cells:
        if vs.issuperset(cell):
            return False
    return True


def is_full_cycle(cx: AnyComplex, cycle: VertexCycle | Sequence[int]) -> bool:
    """A cycle is full iff it is induced in the 1-skeleton and spans no 2-cell."""
    if not isinstance(cycle, VertexCycle):
        cycle = VertexCycle.from_sequence(cycle)
    vs = cycle.vertices
    allowed = set(cycle.edges())
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            e = edge_key(a, b)
            if e not in allowed and e in cx.edge_set:
                return False
    return is_full_subcomplex(cx, vs)


def enumerate_induced_cycles(
    graph: Mapping[int, Iterable[int]], max_len: int
) -> list[VertexCycle]:
    """All chordless cycles of length <= max_len in a simple graph.

    Deterministic: each cycle appears once, in canonical form, and the list
    is sorted by (length, vertices).
    """
    if max_len < 3:
        return []
    adj: dict[int, frozenset[int]] = {}
    for v, ns in graph.items():
        adj[v] = frozenset(ns) - {v}
    found: list[VertexCycle] = []

    def extend(s: int, s_nbrs: frozenset[int], path: list[int], members: set[int]):
        last = path[-1]
        for w in sorted(adj[last]):
            if w <= s or w in members:
                continue
            if any(w in adj[p] for p in path[1:-1]):
                continue  # chord back into the path
            if w in s_nbrs:
                # closing vertex: any extension past w would chord to s
                if len(path) + 1 <= max_len and path[1] < w:
                    found.append(VertexCycle(canonical_cycle(path + [w])))
            elif len(path) + 2 <= max_len:
                path.append(w)
                members.add(w)
                extend(s, s_nbrs, path, members)
                members.discard(w)
                path.pop()

    for s in sorted(adj):
        s_nbrs = adj[s]
        for a in sorted(s_nbrs):
            if a > s:
                extend(s, s_nbrs, [s, a], {s, a})
    found.sort(key=lambda c: (len(c), c.vertices))
    return found


# ---------------------------------------------------------------------------
# metric and topology helpers


def combinatorial_distance(cx: AnyComplex, u: int, v: int) -> int | float:
    """Edge-path distance in the 1-skeleton; inf when disconnected."""
    _check_vertex(u, cx.vertex_count, "combinatorial_distance")
    _check_vertex(v, cx.vertex_count, "combinatorial_distance")
    if u == v:
        return 0
    adj = cx.adjacency
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return inf


def euler_characteristic(cx: AnyComplex) -> int:
    for edge, cells in cx.edge_cells.items():
        if len(cells) > 2:
            raise NonManifoldEdge(edge, len(cells))
    return cx.vertex_count - len(cx.edges) + len(cx.two_cells)


def boundary_edges(cx: AnyComplex) -> tuple[Edge, ...]:
    return tuple(sorted(e for e, cells in cx.edge_cells.items() if len(cells) == 1))


def boundary_cycles(cx: AnyComplex) -> list[VertexCycle]:
    """The boundary edges grouped into simple cycles.

    Every boundary vertex has even boundary degree, so the boundary edge set
    decomposes into edge-disjoint simple cycles; the walk extracts a cycle
    whenever it revisits a vertex, which makes the decomposition (and the
    output order) deterministic.
    """
    for edge, cells in cx.edge_cells.items():
        if len(cells) > 2:
            raise NonManifoldEdge(edge, len(cells))
    unused: set[Edge] = set(boundary_edges(cx))
    badj: dict[int, set[int]] = {}
    for a, b in unused:
        badj.setdefault(a, set()).add(b)
        badj.setdefault(b, set()).add(a)
    cycles: list[VertexCycle] = []
    while unused:
        a, b = min(unused)
        unused.remove((a, b))
        path = [a, b]
        while len(path) > 1:
            cur = path[-1]
            nxt = min(w for w in badj[cur] if edge_key(cur, w) in unused)
            unused.remove(edge_key(cur, nxt))
            if nxt in path:
                i = path.index(nxt)
                cycles.append(VertexCycle.from_sequence(path[i:]))
                del path[i + 1:]
            else:
                path.append(nxt)
    cycles.sort(key=lambda c: (len(c), c.vertices))
    return cycles


def interior_vertices(cx: AnyComplex) -> frozenset[int]:
    """Vertices incident to at least one 2-cell and to no boundary edge."""
    on_boundary: set[int] = set()
    for a, b in boundary_edges(cx):
        on_boundary.add(a)
        on_boundary.add(b)
    return frozenset(
        v
        for v in range(cx.vertex_count)
        if cx.vertex_cells[v] and v not in on_boundary
    )


def is_connected(cx: AnyComplex) -> bool:
    if cx.vertex_count == 0:
        return False
    adj = cx.adjacency
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == cx.vertex_count


def dijkstra_avoiding(
    weighted_adj: Mapping[int, list[tuple[int, int]]],
    src: int,
    dst: int,
    avoid: Edge,
) -> int | None:
    """Shortest weighted path src -> dst that never crosses the given edge."""
    dist = {src: 0}
    pq = [(0, src)]
    while pq:
        d, u = heapq.heappop(pq)
        if u == dst:
            return d
        if d > dist.get(u, inf):
            continue
        for w, units in weighted_adj[u]:
            if edge_key(u, w) == avoid:
                continue
            nd = d + units
            if nd < dist.get(w, inf):
                dist[w] = nd
                heapq.heappush(pq, (nd, w))
    return None

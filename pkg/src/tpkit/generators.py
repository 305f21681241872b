"""Builders for the complexes the checkers run on.

Four fixed fan presets around a distinguished vertex, two deterministic
tilings (pentagons in the {5,4} pattern, flat triangles), and a seeded
random grower that only ever applies curvature-safe moves, so its output
is a CAT(0) disc by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .angles import FULL_TURN, PENTAGON_CORNER, TRIANGLE_CORNER
from .complex_core import TPComplex, build_tp_complex, edge_key
from .errors import GenerationBudgetExceeded, RadiusTooLarge, ValidationError

MAX_PENT_RADIUS = 5
MAX_TRI_RADIUS = 40

PRESETS = (
    "star4",
    "fan3",
    "fan2",
    "fan1",
    "pent4-tiling",
    "tri-tiling",
    "random",
)


@dataclass(frozen=True)
class GeneratorSpec:
    preset: str
    seed: int = 0
    target_cells: int = 50
    pentagon_bias: Fraction = Fraction(1, 2)
    radius: int = 1
    attempt_budget: int = 100_000

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise ValidationError(f"unknown preset {self.preset!r}")
        if self.target_cells < 1:
            raise ValidationError(f"target_cells must be >= 1, got {self.target_cells}")
        if not 0 <= self.pentagon_bias <= 1:
            raise ValidationError(
                f"pentagon_bias must lie in [0, 1], got {self.pentagon_bias}"
            )
        if self.radius < 1:
            raise ValidationError(f"radius must be >= 1, got {self.radius}")
        if self.attempt_budget < 1:
            raise ValidationError(
                f"attempt_budget must be >= 1, got {self.attempt_budget}"
            )


def gen_star4_pentagons() -> TPComplex:
    """Four pentagons around vertex 0, the angle-sum-72 configuration."""
    pentagons = (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (0, 7, 8, 9, 10),
        (0, 10, 11, 12, 1),
    )
    return build_tp_complex(13, (), pentagons)


def gen_fan3_pentagons_triangle() -> TPComplex:
    """Three pentagons and one triangle around vertex 0 (angle sum 64)."""
    pentagons = (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (0, 7, 8, 9, 10),
    )
    return build_tp_complex(11, ((0, 10, 1),), pentagons)


def gen_fan2_pentagons_3triangles() -> TPComplex:
    """Two pentagons and three triangles around vertex 0 (angle sum 66)."""
    pentagons = (
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
    )
    triangles = ((0, 7, 8), (0, 8, 9), (0, 9, 1))
    return build_tp_complex(10, triangles, pentagons)


def gen_fan1_pentagon_5triangles() -> TPComplex:
    """One pentagon and five triangles around vertex 0 (angle sum 68)."""
    pentagons = ((0, 1, 2, 3, 4),)
    triangles = ((0, 4, 5), (0, 5, 6), (0, 6, 7), (0, 7, 8), (0, 8, 1))
    return build_tp_complex(9, triangles, pentagons)


def gen_pentagon_tiling(radius: int) -> TPComplex:
    """Ball of the all-pentagon {5, 4} tiling, grown ring by ring.

    The boundary ring is tracked as (vertex, incident face count) pairs in
    cyclic order; each extension step hangs one new pentagon off every
    boundary edge and one more in every corner that still needs it.
    """
    if radius < 1:
        raise ValidationError(f"radius must be >= 1, got {radius}")
    if radius > MAX_PENT_RADIUS:
        raise RadiusTooLarge(radius, MAX_PENT_RADIUS)
    pentagons = [
        (0, 1, 2, 3, 4),
        (0, 4, 5, 6, 7),
        (0, 7, 8, 9, 10),
        (0, 10, 11, 12, 1),
    ]
    boundary = [
        (1, 2), (2, 1), (3, 1), (4, 2), (5, 1), (6, 1),
        (7, 2), (8, 1), (9, 1), (10, 2), (11, 1), (12, 1),
    ]
    fresh = 13
    for _ in range(radius - 1):
        n = len(boundary)
        spokes = {}
        for v, count in boundary:
            spokes[v] = list(range(fresh, fresh + 3 - count))
            fresh += 3 - count
        corner_mid = {}
        for v, count in boundary:
            if count == 1:
                corner_mid[v] = (fresh, fresh + 1)
                fresh += 2
        edge_wedge = []
        for i in range(n):
            u = boundary[i][0]
            w = boundary[(i + 1) % n][0]
            pentagons.append((spokes[u][-1], u, w, spokes[w][0], fresh))
            edge_wedge.append(fresh)
            fresh += 1
        new_boundary = []
        for i in range(n):
            v, count = boundary[i]
            s = spokes[v]
            if count == 1:
                t, x = corner_mid[v]
                pentagons.append((v, s[0], t, x, s[1]))
                new_boundary += [(s[0], 2), (t, 1), (x, 1), (s[1], 2)]
            else:
                new_boundary.append((s[0], 2))
            new_boundary.append((edge_wedge[i], 1))
        boundary = new_boundary
    return build_tp_complex(fresh, (), pentagons)


def gen_triangle_tiling(radius: int) -> TPComplex:
    """Hexagonal ball of the flat triangle tiling, axial coordinates."""
    if radius < 1:
        raise ValidationError(f"radius must be >= 1, got {radius}")
    if radius > MAX_TRI_RADIUS:
        raise RadiusTooLarge(radius, MAX_TRI_RADIUS)
    coords = [
        (q, r)
        for q in range(-radius, radius + 1)
        for r in range(-radius, radius + 1)
        if max(abs(q), abs(r), abs(q + r)) <= radius
    ]
    index = {c: i for i, c in enumerate(coords)}
    triangles = []
    # Anchors range one step past the ball: a kept triangle needs only its
    # three vertices inside, not its anchor.
    for q in range(-radius - 1, radius + 1):
        for r in range(-radius - 1, radius + 1):
            up = ((q, r), (q + 1, r), (q, r + 1))
            down = ((q + 1, r), (q, r + 1), (q + 1, r + 1))
            for tri in (up, down):
                if all(c in index for c in tri):
                    triangles.append(tuple(index[c] for c in tri))
    return build_tp_complex(len(coords), triangles)


@dataclass
class _Disc:
    """Mutable state for the random grower: a disc plus its boundary walk."""

    vertex_count: int
    triangles: list = field(default_factory=list)
    pentagons: list = field(default_factory=list)
    boundary: list = field(default_factory=list)
    adjacency: dict = field(default_factory=dict)
    angle: dict = field(default_factory=dict)
    edge_cells: dict = field(default_factory=dict)
    pentagon_sets: list = field(default_factory=list)

    def _connect(self, a: int, b: int, cell: tuple):
        self.adjacency.setdefault(a, set()).add(b)
        self.adjacency.setdefault(b, set()).add(a)
        self.edge_cells.setdefault(edge_key(a, b), []).append(cell)

    def add_triangle(self, a: int, b: int, c: int):
        cell = tuple(sorted((a, b, c)))
        self.triangles.append(cell)
        for u, w in ((a, b), (b, c), (a, c)):
            self._connect(u, w, cell)
        for u in cell:
            self.angle[u] = self.angle.get(u, 0) + TRIANGLE_CORNER.units

    def add_pentagon(self, cycle: tuple):
        self.pentagons.append(cycle)
        self.pentagon_sets.append(frozenset(cycle))
        for j in range(5):
            self._connect(cycle[j], cycle[(j + 1) % 5], cycle)
        for u in cycle:
            self.angle[u] = self.angle.get(u, 0) + PENTAGON_CORNER.units

    def new_vertices(self, count: int) -> list:
        first = self.vertex_count
        self.vertex_count += count
        return list(range(first, first + count))


def _closure_ok(disc: _Disc, i: int, corner_units: int) -> bool:
    """Whether the boundary corner at position i can be capped legally.

    Capping identifies the flanking boundary edges' far endpoints u and w
    as neighbors of a new cell, so the move is rejected whenever it would
    create a chord, an induced 4-cycle, or fold two cells onto one edge.
    """
    boundary = disc.boundary
    n = len(boundary)
    u = boundary[(i - 1) % n]
    v = boundary[i]
    w = boundary[(i + 1) % n]
    if u == w:
        return False
    if disc.angle[v] + corner_units < FULL_TURN.units:
        return False
    adj_u = disc.adjacency[u]
    adj_w = disc.adjacency[w]
    if w in adj_u:
        return False
    if adj_u & adj_w != {v}:
        return False
    if any(u in p and w in p for p in disc.pentagon_sets):
        return False
    if disc.edge_cells[edge_key(u, v)] == disc.edge_cells[edge_key(v, w)]:
        return False
    for a in adj_w:
        if a in (u, v) or a in adj_u:
            continue
        for b in disc.adjacency[a]:
            if b in (v, w) or b in adj_w:
                continue
            if b in adj_u:
                return False
    return True


def _close_triangle(disc: _Disc, i: int):
    n = len(disc.boundary)
    u = disc.boundary[(i - 1) % n]
    v = disc.boundary[i]
    w = disc.boundary[(i + 1) % n]
    disc.add_triangle(u, v, w)
    del disc.boundary[i]


def _close_pentagon(disc: _Disc, i: int):
    n = len(disc.boundary)
    u = disc.boundary[(i - 1) % n]
    v = disc.boundary[i]
    w = disc.boundary[(i + 1) % n]
    n1, n2 = disc.new_vertices(2)
    disc.add_pentagon((u, v, w, n1, n2))
    disc.boundary[i:i + 1] = [n2, n1]


def _attach_triangle(disc: _Disc, j: int):
    a = disc.boundary[j]
    b = disc.boundary[(j + 1) % len(disc.boundary)]
    (n,) = disc.new_vertices(1)
    disc.add_triangle(a, b, n)
    disc.boundary.insert(j + 1, n)


def _attach_pentagon(disc: _Disc, j: int):
    a = disc.boundary[j]
    b = disc.boundary[(j + 1) % len(disc.boundary)]
    n1, n2, n3 = disc.new_vertices(3)
    disc.add_pentagon((a, b, n1, n2, n3))
    disc.boundary[j + 1:j + 1] = [n3, n2, n1]


def gen_random_cat0_disc(spec: GeneratorSpec) -> TPComplex:
    """Grow a random triangle-pentagon disc without ever breaking flatness.

    Each step first tries to close a boundary corner whose angle would
    reach a full turn (picking uniformly among legal corners), otherwise
    attaches a fresh cell along a random boundary edge.  Attaching is
    always legal, so the walk never needs to backtrack.
    """
    rng = random.Random(spec.seed)
    disc = _Disc(vertex_count=0)
    if rng.random() < float(spec.pentagon_bias):
        disc.new_vertices(5)
        disc.add_pentagon((0, 1, 2, 3, 4))
        disc.boundary = [0, 1, 2, 3, 4]
    else:
        disc.new_vertices(3)
        disc.add_triangle(0, 1, 2)
        disc.boundary = [0, 1, 2]
    attempts = 1
    while len(disc.triangles) + len(disc.pentagons) < spec.target_cells:
        if attempts >= spec.attempt_budget:
            raise GenerationBudgetExceeded(
                attempts,
                len(disc.triangles) + len(disc.pentagons),
                spec.target_cells,
            )
        want_pent = rng.random() < float(spec.pentagon_bias)
        corner = PENTAGON_CORNER.units if want_pent else TRIANGLE_CORNER.units
        candidates = [
            i for i in range(len(disc.boundary)) if _closure_ok(disc, i, corner)
        ]
        if candidates:
            i = candidates[rng.randrange(len(candidates))]
            if want_pent:
                _close_pentagon(disc, i)
            else:
                _close_triangle(disc, i)
        else:
            j = rng.randrange(len(disc.boundary))
            if want_pent:
                _attach_pentagon(disc, j)
            else:
                _attach_triangle(disc, j)
        attempts += 1
    return build_tp_complex(
        disc.vertex_count, tuple(disc.triangles), tuple(disc.pentagons)
    )


def generate(spec: GeneratorSpec) -> TPComplex:
    """Build the complex a GeneratorSpec describes."""
    if spec.preset == "star4":
        return gen_star4_pentagons()
    if spec.preset == "fan3":
        return gen_fan3_pentagons_triangle()
    if spec.preset == "fan2":
        return gen_fan2_pentagons_3triangles()
    if spec.preset == "fan1":
        return gen_fan1_pentagon_5triangles()
    if spec.preset == "pent4-tiling":
        return gen_pentagon_tiling(spec.radius)
    if spec.preset == "tri-tiling":
        return gen_triangle_tiling(spec.radius)
    return gen_random_cat0_disc(spec)

"""Star subdivision of pentagons.

The subdivision of a triangle-pentagon complex keeps every triangle, adds
one new vertex per pentagon, and replaces each pentagon by the five
triangles joining its center to its boundary edges.  The result is a flag
simplicial complex whenever the input satisfies the triangle-pentagon
invariants; :func:`subdivide` still routes the output through the full
simplicial validator rather than assuming this.
"""

from __future__ import annotations

from .complex_core import SimplicialComplex2D, TPComplex, build_simplicial_complex
from .errors import InvalidIndex


def subdivide(cx: TPComplex) -> SimplicialComplex2D:
    """Star-subdivide every pentagon, returning a validated flag complex.

    Centers receive the fresh indices vertex_count, vertex_count + 1, ... in
    pentagon list order, so the output is determined by the canonical input.
    """
    triangles = list(cx.triangles)
    centers = []
    for i, pent in enumerate(cx.pentagons):
        c = cx.vertex_count + i
        centers.append((i, c))
        for j in range(5):
            triangles.append((pent[j], pent[(j + 1) % 5], c))
    return build_simplicial_complex(
        cx.vertex_count + len(cx.pentagons),
        triangles,
        center_of=centers,
        labels=cx.labels,
    )


def center_vertices(cx: SimplicialComplex2D) -> frozenset[int]:
    """The set of vertices marked as pentagon centers."""
    return cx.center_set


def is_center(cx: SimplicialComplex2D, v: int) -> bool:
    if not 0 <= v < cx.vertex_count:
        raise InvalidIndex(v, cx.vertex_count, "is_center")
    return v in cx.center_set

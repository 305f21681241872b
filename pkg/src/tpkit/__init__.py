"""Verification toolkit for 2-dimensional triangle-pentagon complexes.

Builds complexes whose 2-cells are triangles and chord-free pentagons,
star-subdivides them into flag simplicial complexes, measures angles in
exact integer units of pi/30, and runs the curvature and locality checkers:
the CAT(0) link condition, local k-largeness, m-location via dwheels, the
two neighbor-largeness clauses, and combinatorial girth.
"""

__version__ = "0.1.0"

from .angles import (
    AngleWeight,
    FULL_TURN,
    PENTAGON_CORNER,
    TRIANGLE_CORNER,
    WHEEL_APEX_CORNER,
    WHEEL_RIM_CORNER,
)
from .complex_core import (
    LinkEdge,
    LinkGraph,
    SimplicialComplex2D,
    TPComplex,
    VertexCycle,
    boundary_cycles,
    boundary_edges,
    build_simplicial_complex,
    build_tp_complex,
    canonical_cycle,
    combinatorial_distance,
    edge_key,
    enumerate_induced_cycles,
    euler_characteristic,
    interior_vertices,
    is_connected,
    is_full_cycle,
    is_full_subcomplex,
    link_of,
)
from .curvature import (
    DiscVerdict,
    LinkConditionReport,
    VertexLinkRecord,
    check_link_condition,
    corner_angle,
    is_cat0_disc,
    vertex_angle_sum,
    weighted_link_girth,
)
from .errors import (
    DegenerateCell,
    DuplicateCell,
    FlagViolation,
    Full4Cycle,
    GenerationBudgetExceeded,
    InvalidIndex,
    NonManifoldEdge,
    NotFlag,
    PentagonChord,
    RadiusTooLarge,
    SchemaError,
    SharedEdges,
    TpkitError,
    UnfilledTriangleClique,
    UnknownWitnessReference,
    ValidationError,
    VertexNotInCell,
)
from .generators import (
    GeneratorSpec,
    MAX_PENT_RADIUS,
    MAX_TRI_RADIUS,
    PRESETS,
    gen_fan1_pentagon_5triangles,
    gen_fan2_pentagons_3triangles,
    gen_fan3_pentagons_triangle,
    gen_pentagon_tiling,
    gen_random_cat0_disc,
    gen_star4_pentagons,
    gen_triangle_tiling,
    generate,
)
from .io_cli import digest, export_dot, parse, run_cli, serialize
from .locality import (
    ClauseRecord,
    DwheelWitness,
    FiveEightReport,
    LargenessReport,
    LargenessViolation,
    LocationReport,
    NeighborLargenessWitness,
    Wheel,
    check_58_condition,
    combinatorial_girth,
    enumerate_dwheels,
    enumerate_wheels,
    is_locally_k_large,
    is_m_located,
    link_girth,
    wheel_is_full,
)
from .subdivision import center_vertices, is_center, subdivide

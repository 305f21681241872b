"""Canonical JSON documents, check reports, DOT export, and the CLI.

The on-disk formats are ``tpc-1`` (triangle-pentagon complexes) and
``tps-1`` (flag simplicial complexes with optional center markers).  Both
serializations are canonical: parsing and re-serializing any valid document
yields fixed bytes, and check reports are byte-stable across runs and
worker counts.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from math import inf
from pathlib import Path

from .angles import AngleWeight
from .complex_core import (
    AnyComplex,
    SimplicialComplex2D,
    build_simplicial_complex,
    build_tp_complex,
    edge_key,
    interior_vertices,
    link_of,
)
from .curvature import check_link_condition
from .errors import SchemaError, TpkitError, UnknownWitnessReference
from .generators import PRESETS, GeneratorSpec, generate
from .locality import (
    check_58_condition,
    combinatorial_girth,
    enumerate_dwheels,
    is_locally_k_large,
    is_m_located,
)
from .subdivision import subdivide

TOOL_NAME = "tpkit"
TOOL_VERSION = "0.1.0"

FORMAT_TPC = "tpc-1"
FORMAT_TPS = "tps-1"


# ---------------------------------------------------------------------------
# document parsing and serialization


def _require(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise SchemaError(path, message)


def _require_int(value, path: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(path, f"expected an integer >= {minimum}, got {value}")
    return value


def _require_cell(value, path: str, size: int) -> tuple[int, ...]:
    _require(isinstance(value, list), path, f"expected a {size}-entry array")
    _require(
        len(value) == size,
        path,
        f"expected {size} vertex indices, got {len(value)} entries",
    )
    return tuple(_require_int(v, f"{path}/{i}") for i, v in enumerate(value))


def _int_key(key: str, path: str) -> int:
    try:
        return int(key)
    except (TypeError, ValueError):
        raise SchemaError(path, f"expected a decimal integer key, got {key!r}")


def parse(data: bytes | str) -> AnyComplex:
    """Parse and fully validate a tpc-1 or tps-1 JSON document."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError("/", f"not valid UTF-8: {exc}")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError("/", f"not valid JSON: {exc}")
    _require(isinstance(doc, dict), "/", "document must be a JSON object")
    fmt = doc.get("format")
    _require("format" in doc, "/format", "missing")
    _require(
        fmt in (FORMAT_TPC, FORMAT_TPS),
        "/format",
        f"expected {FORMAT_TPC!r} or {FORMAT_TPS!r}, got {fmt!r}",
    )
    allowed = {"format", "vertex_count", "triangles", "labels"}
    allowed.add("pentagons" if fmt == FORMAT_TPC else "centers")
    for key in doc:
        _require(key in allowed, f"/{key}", f"unexpected key in a {fmt} document")
    _require("vertex_count" in doc, "/vertex_count", "missing")
    vertex_count = _require_int(doc["vertex_count"], "/vertex_count", minimum=0)
    raw_triangles = doc.get("triangles", [])
    _require(isinstance(raw_triangles, list), "/triangles", "expected an array")
    triangles = [
        _require_cell(t, f"/triangles/{i}", 3) for i, t in enumerate(raw_triangles)
    ]
    raw_labels = doc.get("labels", {})
    _require(isinstance(raw_labels, dict), "/labels", "expected an object")
    labels = []
    for key, text in raw_labels.items():
        path = f"/labels/{key}"
        _require(isinstance(text, str), path, f"expected a string, got {text!r}")
        labels.append((_int_key(key, path), text))
    if fmt == FORMAT_TPC:
        raw_pentagons = doc.get("pentagons", [])
        _require(isinstance(raw_pentagons, list), "/pentagons", "expected an array")
        pentagons = [
            _require_cell(p, f"/pentagons/{i}", 5)
            for i, p in enumerate(raw_pentagons)
        ]
        return build_tp_complex(vertex_count, triangles, pentagons, labels)
    raw_centers = doc.get("centers", {})
    _require(isinstance(raw_centers, dict), "/centers", "expected an object")
    center_of = []
    for key, idx in raw_centers.items():
        path = f"/centers/{key}"
        center_of.append((_require_int(idx, path, minimum=0), _int_key(key, path)))
    return build_simplicial_complex(vertex_count, triangles, center_of, labels)


def serialize(cx: AnyComplex) -> bytes:
    """Canonical JSON bytes for a complex; the inverse of parse."""
    doc: dict = {"format": FORMAT_TPC if cx.kind == "tpc" else FORMAT_TPS}
    doc["vertex_count"] = cx.vertex_count
    doc["triangles"] = [list(t) for t in cx.triangles]
    if cx.kind == "tpc":
        doc["pentagons"] = [list(p) for p in cx.pentagons]
    else:
        doc["centers"] = {
            str(v): idx for idx, v in sorted(cx.center_of, key=lambda p: p[1])
        }
    if cx.labels:
        doc["labels"] = {str(v): text for v, text in cx.labels}
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def digest(cx: AnyComplex) -> str:
    return "sha256:" + hashlib.sha256(serialize(cx)).hexdigest()


# ---------------------------------------------------------------------------
# DOT export


def _escape_dot(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _resolve_highlight(cx: AnyComplex, highlight: str):
    """Turn a highlight reference into (node set, edge set)."""
    if highlight == "centers":
        centers = cx.center_set if cx.kind == "tps" else frozenset()
        return set(centers), set()
    if highlight.startswith("girth:"):
        ref = highlight[len("girth:"):]
        try:
            v = int(ref)
        except ValueError:
            raise UnknownWitnessReference(highlight, f"{ref!r} is not a vertex index")
        if not 0 <= v < cx.vertex_count:
            raise UnknownWitnessReference(
                highlight, f"vertex {v} out of range 0..{cx.vertex_count - 1}"
            )
        link_edges = {edge_key(e.a, e.b) for e in link_of(cx, v).edges}
        return {v}, link_edges & set(cx.edge_set)
    if highlight.startswith("dwheel:"):
        ref = highlight[len("dwheel:"):]
        if cx.kind != "tps":
            raise UnknownWitnessReference(
                highlight, "dwheel witnesses exist only for tps-1 complexes"
            )
        try:
            i = int(ref)
        except ValueError:
            raise UnknownWitnessReference(highlight, f"{ref!r} is not a witness index")
        witnesses = enumerate_dwheels(cx, max_boundary=7)
        if not 0 <= i < len(witnesses):
            raise UnknownWitnessReference(
                highlight, f"found {len(witnesses)} dwheel witnesses"
            )
        w = witnesses[i]
        nodes = set(w.wheel1.vertices() | w.wheel2.vertices())
        return nodes, set(w.wheel1.edges() | w.wheel2.edges())
    raise UnknownWitnessReference(
        highlight, "expected centers, girth:V, or dwheel:I"
    )


def export_dot(cx: AnyComplex, highlight: str | None = None) -> str:
    """DOT text for the 1-skeleton; centers drawn as double circles."""
    hl_nodes, hl_edges = (
        _resolve_highlight(cx, highlight) if highlight else (set(), set())
    )
    label_map = dict(cx.labels)
    centers = cx.center_set if cx.kind == "tps" else frozenset()
    lines = ["graph complex {"]
    for v in range(cx.vertex_count):
        attrs = [f'label="{_escape_dot(label_map.get(v, str(v)))}"']
        if v in centers:
            attrs.append("shape=doublecircle")
        if v in hl_nodes:
            attrs.append("penwidth=2.0")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for a, b in cx.edges:
        if (a, b) in hl_edges:
            lines.append(f"  {a} -- {b} [color=red];")
        else:
            lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# check reports


def _angle_json(units: int | float | None) -> dict | None:
    if units is None or units == inf:
        return None
    return {"units": units, "display": AngleWeight(units).display()}


def _girth_json(value: int | float) -> int | None:
    return None if value == inf else value


def _surface_complex(cx: AnyComplex) -> tuple[str, SimplicialComplex2D]:
    """The complex the flag-dependent checks run on, with its report marker.

    A tps-1 input is checked as is; a tpc-1 input is checked through its
    subdivision, which the report marks with surface "subdivision".
    """
    if cx.kind == "tps":
        return "input", cx
    return "subdivision", subdivide(cx)


def _validate_section(cx: AnyComplex) -> tuple[dict, str]:
    section = {
        "verdict": "pass",
        "kind": FORMAT_TPC if cx.kind == "tpc" else FORMAT_TPS,
        "vertices": cx.vertex_count,
        "triangles": len(cx.triangles),
    }
    if cx.kind == "tpc":
        section["pentagons"] = len(cx.pentagons)
        detail = f"{len(cx.pentagons)} pentagons"
    else:
        section["centers"] = len(cx.center_of)
        detail = f"{len(cx.center_of)} centers"
    section["edges"] = len(cx.edges)
    line = (
        f"validate: pass ({section['kind']}: {cx.vertex_count} vertices, "
        f"{len(cx.triangles)} triangles, {detail})"
    )
    return section, line


def _link_condition_section(cx: AnyComplex, parallel: int) -> tuple[dict, bool, list[str]]:
    report = check_link_condition(cx, parallel=parallel)
    interior = sum(1 for r in report.records if r.interior)
    witnesses = []
    lines = []
    for r in report.records:
        if r.satisfied:
            continue
        witnesses.append(
            {
                "vertex": r.vertex,
                "angle": _angle_json(r.angle_units),
                "shortest_loop": _angle_json(r.girth_units),
            }
        )
        loop = (
            AngleWeight(r.girth_units).display()
            if r.girth_units is not None
            else "none (acyclic link)"
        )
        lines.append(
            f"  vertex {r.vertex}: angle sum "
            f"{AngleWeight(r.angle_units).display()}, shortest loop {loop}"
        )
    section = {
        "verdict": "pass" if report.ok else "fail",
        "surface": "input",
        "interior_vertices": interior,
        "witnesses": witnesses,
    }
    head = (
        f"link-condition: pass (interior vertices: {interior})"
        if report.ok
        else f"link-condition: fail (vertices below a full turn: {len(witnesses)})"
    )
    return section, report.ok, [head] + lines


def _locally_large_section(surface, sx, k) -> tuple[dict, bool, list[str]]:
    report = is_locally_k_large(sx, k)
    witnesses = [
        {"vertex": v.vertex, "cycle": list(v.cycle.vertices), "length": len(v.cycle)}
        for v in report.violations
    ]
    section = {
        "verdict": "pass" if report.ok else "fail",
        "surface": surface,
        "k": k,
        "witnesses": witnesses,
    }
    lines = [
        f"locally-large({k}): "
        + ("pass" if report.ok else f"fail (violating vertices: {len(witnesses)})")
    ]
    for v in report.violations:
        lines.append(
            f"  vertex {v.vertex}: induced {len(v.cycle)}-cycle "
            f"{list(v.cycle.vertices)} in its link"
        )
    return section, report.ok, lines


def _dwheel_json(w) -> dict:
    return {
        "kind": w.kind,
        "boundary_length": w.boundary_length,
        "wheel1": {"hub": w.wheel1.hub, "rim": list(w.wheel1.rim.vertices)},
        "wheel2": {"hub": w.wheel2.hub, "rim": list(w.wheel2.rim.vertices)},
        "v1": w.v1,
        "v2": w.v2,
        "v3": w.v3,
        "w1": w.w1,
        "wl": w.wl,
        "containing_vertex": w.containing_vertex,
    }


def _located_section(surface, sx, m) -> tuple[dict, bool, list[str]]:
    report = is_m_located(sx, m)
    ok = report.verdict == "located"
    section = {
        "verdict": report.verdict,
        "surface": surface,
        "m": m,
        "dwheels_found": len(report.dwheels_found),
        "witnesses": [_dwheel_json(w) for w in report.violating],
    }
    lines = [
        f"located({m}): {report.verdict} (dwheels found: {len(report.dwheels_found)})"
    ]
    for w in report.violating:
        lines.append(
            f"  {w.kind} ({len(w.wheel1.rim)},{len(w.wheel2.rim)})-dwheel, "
            f"boundary {w.boundary_length}, hubs {w.wl} and {w.v2}"
        )
    return section, ok, lines


def _five_eight_section(surface, sx) -> tuple[dict, bool, list[str]]:
    report = check_58_condition(sx)

    def clause_json(clause):
        return {
            "status": clause.status,
            "witnesses": [
                {
                    "vertex": w.vertex,
                    "girth": _girth_json(w.girth),
                    "neighbor": w.neighbor,
                    "neighbor_girth": _girth_json(w.neighbor_girth),
                }
                for w in clause.witnesses
            ],
        }

    section = {
        "verdict": "pass" if report.ok else "fail",
        "surface": surface,
        "clauses": {
            "5/8": clause_json(report.clause_58),
            "6/7": clause_json(report.clause_67),
        },
    }
    lines = [
        f"five-eight: {'pass' if report.ok else 'fail'} "
        f"(5/8 {report.clause_58.status}, 6/7 {report.clause_67.status})"
    ]
    for clause in (report.clause_58, report.clause_67):
        for w in clause.witnesses:
            lines.append(
                f"  clause {clause.name}: vertex {w.vertex} (link girth {w.girth}) "
                f"has neighbor {w.neighbor} with link girth {w.neighbor_girth}"
            )
    return section, report.ok, lines


def _girth_section(surface, sx) -> tuple[dict, bool, list[str]]:
    """Combinatorial girth >= 7 at interior vertices that came from pentagons."""
    centers = sx.center_set
    targets = sorted(
        v
        for v in interior_vertices(sx)
        if v not in centers and any(u in centers for u in sx.adjacency[v])
    )
    witnesses = []
    for v in targets:
        g = combinatorial_girth(sx, v)
        if g < 7:
            witnesses.append({"vertex": v, "girth": g})
    ok = not witnesses
    section = {
        "verdict": "pass" if ok else "fail",
        "surface": surface,
        "checked": len(targets),
        "witnesses": witnesses,
    }
    lines = [
        f"girth: {'pass' if ok else 'fail'} (pentagon vertices checked: {len(targets)})"
    ]
    for w in witnesses:
        lines.append(f"  vertex {w['vertex']}: combinatorial girth {w['girth']} < 7")
    return section, ok, lines


def build_report(cx: AnyComplex, checks: dict) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "input_digest": digest(cx),
        "input_format": FORMAT_TPC if cx.kind == "tpc" else FORMAT_TPS,
        "checks": checks,
    }


def report_bytes(report: dict) -> bytes:
    return (json.dumps(report, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# CLI


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _int_at_least(minimum: int):
    def convert(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value

    convert.__name__ = "integer"
    return convert


def _bias_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("zero denominator")
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError("must lie in [0, 1]")
    return value


_bias_fraction.__name__ = "fraction"


def _build_parser() -> _Parser:
    parser = _Parser(prog=TOOL_NAME, description="Triangle-pentagon complex toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="parse a document and check every invariant")
    p.add_argument("file")
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("subdivide", help="star-subdivide a tpc-1 document")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True, help="tps-1 output path")
    p.set_defaults(run=_cmd_subdivide)

    p = sub.add_parser("check", help="run curvature and locality checks")
    p.add_argument("file")
    p.add_argument(
        "--link-condition", action="store_true",
        help="every interior vertex link has weighted girth >= 60 units",
    )
    p.add_argument(
        "--locally-large", type=_int_at_least(4), metavar="K",
        help="no vertex link contains an induced cycle shorter than K",
    )
    p.add_argument(
        "--located", type=_int_at_least(4), metavar="M",
        help="every dwheel of boundary length <= M lies in a vertex link",
    )
    p.add_argument(
        "--five-eight", action="store_true",
        help="neighbor largeness implications for girth-4 and girth-5 vertices",
    )
    p.add_argument(
        "--girth", action="store_true",
        help="combinatorial girth >= 7 at interior pentagon-side vertices",
    )
    p.add_argument("--all", action="store_true", help="run every check above")
    p.add_argument("--json", metavar="OUT", help="also write a JSON report to OUT")
    p.add_argument(
        "--parallel", type=_int_at_least(1), default=1, metavar="N",
        help="worker threads for the link condition (default 1)",
    )
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("generate", help="write a preset or random complex")
    p.add_argument("preset", choices=PRESETS)
    p.add_argument("--seed", type=int, default=0, help="random preset RNG seed")
    p.add_argument(
        "--cells", type=_int_at_least(1), default=50, metavar="N",
        help="random preset cell count (default 50)",
    )
    p.add_argument(
        "--bias", type=_bias_fraction, default=Fraction(1, 2), metavar="P",
        help="pentagon probability as a fraction like 1/2 (default 1/2)",
    )
    p.add_argument(
        "--radius", type=_int_at_least(1), default=1, metavar="R",
        help="tiling preset radius (default 1)",
    )
    p.add_argument("-o", "--output", required=True, help="tpc-1 output path")
    p.set_defaults(run=_cmd_generate)

    p = sub.add_parser("export", help="write a DOT drawing of the 1-skeleton")
    p.add_argument("file")
    p.add_argument("--dot", required=True, metavar="OUT", help="DOT output path")
    p.add_argument(
        "--highlight", metavar="REF",
        help="mark a witness: centers, girth:V, or dwheel:I",
    )
    p.set_defaults(run=_cmd_export)

    return parser


def _load(path: str) -> AnyComplex:
    return parse(Path(path).read_bytes())


def _cmd_validate(args) -> int:
    cx = _load(args.file)
    _, line = _validate_section(cx)
    print(line)
    return 0


def _cmd_subdivide(args) -> int:
    cx = _load(args.file)
    if cx.kind != "tpc":
        raise SchemaError("/format", "already a subdivided (tps-1) document")
    sx = subdivide(cx)
    Path(args.output).write_bytes(serialize(sx))
    print(
        f"wrote {args.output} ({FORMAT_TPS}: {sx.vertex_count} vertices, "
        f"{len(sx.triangles)} triangles, {len(sx.center_of)} centers)"
    )
    return 0


def _cmd_check(args) -> int:
    cx = _load(args.file)
    want_link = args.link_condition or args.all
    k = args.locally_large if args.locally_large is not None else (5 if args.all else None)
    m = args.located if args.located is not None else (7 if args.all else None)
    want_58 = args.five_eight or args.all
    want_girth = args.girth or args.all

    checks: dict = {}
    all_ok = True
    lines: list[str] = []

    section, line = _validate_section(cx)
    checks["validate"] = section
    lines.append(line)

    if want_link:
        section, ok, more = _link_condition_section(cx, args.parallel)
        checks["link-condition"] = section
        all_ok = all_ok and ok
        lines += more

    if k is not None or m is not None or want_58 or want_girth:
        surface, sx = _surface_complex(cx)
        if k is not None:
            section, ok, more = _locally_large_section(surface, sx, k)
            checks["locally-large"] = section
            all_ok = all_ok and ok
            lines += more
        if m is not None:
            section, ok, more = _located_section(surface, sx, m)
            checks["located"] = section
            all_ok = all_ok and ok
            lines += more
        if want_58:
            section, ok, more = _five_eight_section(surface, sx)
            checks["five-eight"] = section
            all_ok = all_ok and ok
            lines += more
        if want_girth:
            section, ok, more = _girth_section(surface, sx)
            checks["girth"] = section
            all_ok = all_ok and ok
            lines += more

    for line in lines:
        print(line)
    if args.json:
        Path(args.json).write_bytes(report_bytes(build_report(cx, checks)))
    return 0 if all_ok else 1


def _cmd_generate(args) -> int:
    spec = GeneratorSpec(
        preset=args.preset,
        seed=args.seed,
        target_cells=args.cells,
        pentagon_bias=args.bias,
        radius=args.radius,
    )
    cx = generate(spec)
    Path(args.output).write_bytes(serialize(cx))
    cells = len(cx.triangles) + len(cx.pentagons)
    print(
        f"wrote {args.output} ({args.preset}: {cx.vertex_count} vertices, "
        f"{cells} cells)"
    )
    return 0


def _cmd_export(args) -> int:
    cx = _load(args.file)
    text = export_dot(cx, highlight=args.highlight)
    Path(args.dot).write_bytes(text.encode("utf-8"))
    print(f"wrote {args.dot}")
    return 0


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 3
    try:
        return args.run(args)
    except TpkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))

"""JSON encodings and plain-text grid rendering.

Field elements are encoded as their canonical strings.  The documented
shapes are::

    field          {"kind": "rational"} | {"kind": "quadratic", "d": 5}
    matrix         {"field": ..., "n": 3, "entries": [["0","1",...], ...]}
    seed row       {"cycle": ["2"]} | {"table": {"start": -1, "values": [...]}}
    frieze seeds   {"field": ..., "x": <row>, "y": <row>}
    0-frieze seeds {"field": ..., "u": <row>, "v": <row>}
    two-row matrix {"field": ..., "rows": [["1","2"], ["3","4"]]}
    triangulation  {"k": 5, "diagonals": [[1,3],[1,4]]}

Malformed documents raise ValueError with a description of the offence.
"""

from __future__ import annotations

from typing import Any

from .classical import Triangulation, TwoRowMatrix
from .field import (
    RATIONAL,
    FieldDescriptor,
    format_element,
    parse_element,
)
from .frieze import FriezeSeeds, InfiniteFrieze, SeedRow
from .matrix import (
    FriezeMatrix,
    TriangularMatrix,
    ValidationReport,
    Violation,
)
from .zerofrieze import ZeroFrieze

__all__ = [
    "field_from_json",
    "field_to_json",
    "frieze_seeds_from_json",
    "frieze_seeds_to_json",
    "matrix_from_json",
    "matrix_to_json",
    "render_frieze_grid",
    "render_matrix_grid",
    "render_zero_grid",
    "report_to_json",
    "triangular_to_json",
    "triangulation_from_json",
    "triangulation_to_json",
    "two_row_from_json",
    "two_row_to_json",
    "zero_seeds_from_json",
    "zero_seeds_to_json",
]


def field_to_json(fd: FieldDescriptor) -> dict[str, Any]:
    if fd.is_rational:
        return {"kind": "rational"}
    return {"kind": "quadratic", "d": fd.d}


def field_from_json(obj: Any) -> FieldDescriptor:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError('field must be an object with a "kind"')
    kind = obj["kind"]
    if kind == "rational":
        return RATIONAL
    if kind == "quadratic":
        if "d" not in obj or not isinstance(obj["d"], int):
            raise ValueError('quadratic field needs an integer "d"')
        return FieldDescriptor(obj["d"])
    raise ValueError(f'unknown field kind {kind!r}')


def matrix_to_json(m: FriezeMatrix) -> dict[str, Any]:
    return {
        "field": field_to_json(m.field),
        "n": m.n,
        "entries": [[format_element(e) for e in row] for row in m.rows()],
    }


def triangular_to_json(t: TriangularMatrix) -> dict[str, Any]:
    return {
        "field": field_to_json(t.field),
        "n": t.n,
        "entries": [[format_element(e) for e in row] for row in t.rows],
    }


def matrix_from_json(obj: Any) -> FriezeMatrix:
    if not isinstance(obj, dict):
        raise ValueError("matrix document must be an object")
    fd = field_from_json(obj.get("field", {"kind": "rational"}))
    entries = obj.get("entries")
    if not isinstance(entries, list) or not entries:
        raise ValueError('matrix needs a non-empty "entries" array')
    n = obj.get("n", len(entries))
    if n != len(entries) or any(
        not isinstance(r, list) or len(r) != n for r in entries
    ):
        raise ValueError('"entries" must be an n x n array of strings')
    return FriezeMatrix(
        [[parse_element(str(s), fd) for s in row] for row in entries]
    )


def _seed_row_to_json(row: SeedRow) -> dict[str, Any]:
    values = [format_element(v) for v in row.values]
    if row.is_cycle:
        return {"cycle": values}
    return {"table": {"start": row.start, "values": values}}


def _seed_row_from_json(obj: Any, fd: FieldDescriptor, name: str) -> SeedRow:
    if isinstance(obj, dict) and "cycle" in obj:
        values = obj["cycle"]
        if not isinstance(values, list) or not values:
            raise ValueError(f'"{name}.cycle" must be a non-empty array')
        return SeedRow.cycle([parse_element(str(s), fd) for s in values])
    if isinstance(obj, dict) and "table" in obj:
        table = obj["table"]
        if (
            not isinstance(table, dict)
            or not isinstance(table.get("start"), int)
            or not isinstance(table.get("values"), list)
            or not table["values"]
        ):
            raise ValueError(f'"{name}.table" needs "start" and "values"')
        return SeedRow.table(
            table["start"], [parse_element(str(s), fd) for s in table["values"]]
        )
    raise ValueError(f'seed row "{name}" must carry "cycle" or "table"')


def frieze_seeds_to_json(seeds: FriezeSeeds) -> dict[str, Any]:
    return {
        "field": field_to_json(seeds.field),
        "x": _seed_row_to_json(seeds.x),
        "y": _seed_row_to_json(seeds.y),
    }


def frieze_seeds_from_json(obj: Any) -> FriezeSeeds:
    if not isinstance(obj, dict):
        raise ValueError("seed document must be an object")
    fd = field_from_json(obj.get("field", {"kind": "rational"}))
    return FriezeSeeds(
        _seed_row_from_json(obj.get("x"), fd, "x"),
        _seed_row_from_json(obj.get("y"), fd, "y"),
        fd,
    )


def zero_seeds_from_json(obj: Any) -> tuple[SeedRow, SeedRow, FieldDescriptor]:
    if not isinstance(obj, dict):
        raise ValueError("seed document must be an object")
    fd = field_from_json(obj.get("field", {"kind": "rational"}))
    return (
        _seed_row_from_json(obj.get("u"), fd, "u"),
        _seed_row_from_json(obj.get("v"), fd, "v"),
        fd,
    )


def zero_seeds_to_json(u: SeedRow, v: SeedRow, fd: FieldDescriptor) -> dict[str, Any]:
    return {
        "field": field_to_json(fd),
        "u": _seed_row_to_json(u),
        "v": _seed_row_to_json(v),
    }


def two_row_to_json(x: TwoRowMatrix) -> dict[str, Any]:
    return {
        "field": field_to_json(x.field),
        "rows": [
            [format_element(v) for v in x.top],
            [format_element(v) for v in x.bottom],
        ],
    }


def two_row_from_json(obj: Any) -> TwoRowMatrix:
    if not isinstance(obj, dict):
        raise ValueError("two-row document must be an object")
    fd = field_from_json(obj.get("field", {"kind": "rational"}))
    rows = obj.get("rows")
    if (
        not isinstance(rows, list)
        or len(rows) != 2
        or any(not isinstance(r, list) for r in rows)
        or len(rows[0]) != len(rows[1])
    ):
        raise ValueError('"rows" must be two equally long arrays of strings')
    return TwoRowMatrix(
        tuple(parse_element(str(s), fd) for s in rows[0]),
        tuple(parse_element(str(s), fd) for s in rows[1]),
    )


def triangulation_to_json(t: Triangulation) -> dict[str, Any]:
    return {"k": t.k, "diagonals": [list(d) for d in sorted(t.diagonals)]}


def triangulation_from_json(obj: Any) -> Triangulation:
    if not isinstance(obj, dict) or not isinstance(obj.get("k"), int):
        raise ValueError('triangulation needs an integer "k"')
    diagonals = obj.get("diagonals", [])
    if not isinstance(diagonals, list) or any(
        not isinstance(d, list) or len(d) != 2 for d in diagonals
    ):
        raise ValueError('"diagonals" must be an array of [p, q] pairs')
    return Triangulation(obj["k"], frozenset((int(p), int(q)) for p, q in diagonals))


def report_to_json(report: ValidationReport) -> dict[str, Any]:
    def violation(v: Violation) -> dict[str, Any]:
        return {
            "rule": v.rule,
            "indices": list(v.indices),
            "lhs": format_element(v.lhs),
            "rhs": format_element(v.rhs),
        }

    return {"ok": report.ok, "violations": [violation(v) for v in report.violations]}


def _layout(rows: list[list[str]]) -> str:
    """Half-step offset layout: row r is indented r half-cells."""
    width = max((len(s) for row in rows for s in row), default=1) + 2
    half = width // 2 or 1
    lines = []
    for r, row in enumerate(rows):
        cells = "".join(s.center(width) for s in row)
        lines.append(" " * (r * half) + cells.rstrip())
    return "\n".join(lines)


def render_frieze_grid(
    f: InfiniteFrieze, rows: int, cols: int, col_start: int = 0
) -> str:
    """Rows r = 0..rows-1 of entries f[i, i+r], i in [col_start, col_start+cols)."""
    grid = [
        [
            format_element(f.entry(i, i + r), compact=True)
            for i in range(col_start, col_start + cols)
        ]
        for r in range(rows)
    ]
    return _layout(grid)


def render_zero_grid(
    zf: ZeroFrieze, rows: int, cols: int, col_start: int = 0
) -> str:
    """Rows r = 0..rows-1 of entries t[i, i+r-1]; r = 0 is u, r = 1 is v."""
    grid = [
        [
            format_element(zf.entry(i, i + r - 1), compact=True)
            for i in range(col_start, col_start + cols)
        ]
        for r in range(rows)
    ]
    return _layout(grid)


def render_matrix_grid(m: FriezeMatrix | TriangularMatrix) -> str:
    """Aligned whitespace-separated table of compact entry strings."""
    rows = m.rows() if isinstance(m, FriezeMatrix) else m.rows
    cells = [[format_element(e, compact=True) for e in row] for row in rows]
    width = max(len(s) for row in cells for s in row)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in cells)

"""0-frieze patterns: all-nonzero arrays whose neighbouring diamonds vanish.

A 0-frieze is a Z^2-indexed array t[i,j] (j >= i-1) of nonzero values with

    t[i,j]*t[i+1,j+1] - t[i+1,j]*t[i,j+1] = 0   for all j >= i,

determined by its first two rows u_i = t[i,i-1] and v_i = t[i,i].  The
vanishing minors make every such array rank one: t[i,j] = a_i * b_j on any
connected window, which :func:`rank1_factorize` recovers.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .errors import FactorizationImpossibleError, ZeroEntryError
from .field import FieldDescriptor, FieldElement
from .frieze import InfiniteFrieze, SeedRow
from .matrix import RULE_ZERO_DIAMOND, ValidationReport, Violation

__all__ = [
    "ZeroFrieze",
    "check_zero_diamond",
    "from_frieze",
    "rank1_factorize",
    "window_cells",
]

RULE_NONZERO = "nonzero"

Row = "SeedRow | Callable[[int], FieldElement]"


def _as_fn(row) -> Callable[[int], FieldElement]:
    if isinstance(row, SeedRow):
        return row.value
    return row


class ZeroFrieze:
    """Memoized evaluator for t[i,j] from the rows u and v.

    Rows may be :class:`SeedRow` values or arbitrary callables on Z (the
    latter is how 0-friezes derived from a frieze are backed).  Deeper rows
    follow t[i,j] = t[i,j-1]*t[i+1,j]/t[i+1,j-1]; the evaluation order
    never changes values and the memo fill is idempotent, same ownership
    contract as :class:`~friezecalc.frieze.InfiniteFrieze`.
    """

    def __init__(self, u, v, field: FieldDescriptor):
        self._u = _as_fn(u)
        self._v = _as_fn(v)
        self.field = field
        self._memo: dict[tuple[int, int], FieldElement] = {}

    def u(self, i: int) -> FieldElement:
        val = self._u(i)
        if val.is_zero:
            raise ZeroEntryError((i, i - 1), f"u[{i}] is zero")
        return val

    def v(self, i: int) -> FieldElement:
        val = self._v(i)
        if val.is_zero:
            raise ZeroEntryError((i, i), f"v[{i}] is zero")
        return val

    def _get(self, i: int, j: int) -> FieldElement:
        if j == i - 1:
            return self.u(i)
        if j == i:
            return self.v(i)
        return self._memo[(i, j)]

    def entry(self, i: int, j: int) -> FieldElement:
        if j < i - 1:
            raise ValueError(f"0-frieze entries need j >= i-1, got ({i},{j})")
        if j - i <= 0:
            return self._get(i, j)
        memo = self._memo
        if (i, j) in memo:
            return memo[(i, j)]
        for dist in range(1, j - i + 1):
            for a in range(i, j - dist + 1):
                if (a, a + dist) in memo:
                    continue
                val = (
                    self._get(a, a + dist - 1)
                    * self._get(a + 1, a + dist)
                    / self._get(a + 1, a + dist - 1)
                )
                if val.is_zero:
                    raise ZeroEntryError(
                        (a, a + dist),
                        f"0-frieze entry ({a},{a + dist}) is zero; "
                        "the rows admit no 0-frieze",
                    )
                memo[(a, a + dist)] = val
        return memo[(i, j)]


def from_frieze(f: InfiniteFrieze, k: int) -> ZeroFrieze:
    """The 0-frieze attached to a frieze along its k-th diagonals.

    The first two rows are read off the frieze:

        u_i = -2*x[k+i-3]                       (i <= 2)
        u_i = -2*x[k+i-2]                       (i >= 3)
        v_i = -2*f[k+i-2,k+1]*x[k+i-2]/f[k+i-1,k+1]   (i <= 1)
        v_i = x[k]                              (i = 2)
        v_i = -2*f[k,k+i-1]*x[k+i-2]/f[k,k+i-2]       (i >= 3)

    and everything deeper follows from the zero diamond rule.
    """
    fd = f.field
    minus2 = fd.from_int(-2)

    def u_fn(i: int) -> FieldElement:
        return minus2 * f.x(k + i - 3 if i <= 2 else k + i - 2)

    def v_fn(i: int) -> FieldElement:
        if i == 2:
            return f.x(k)
        if i <= 1:
            return minus2 * f.entry(k + i - 2, k + 1) * f.x(k + i - 2) / f.entry(k + i - 1, k + 1)
        return minus2 * f.entry(k, k + i - 1) * f.x(k + i - 2) / f.entry(k, k + i - 2)

    return ZeroFrieze(u_fn, v_fn, fd)


def window_cells(
    zf: ZeroFrieze, col_start: int, cols: int, rows: int
) -> dict[tuple[int, int], FieldElement]:
    """Evaluate a parallelogram window: rows r = 0..rows-1 give t[i, i+r-1]
    for i in [col_start, col_start+cols); r = 0 is the u row, r = 1 the v row.
    """
    if cols < 1 or rows < 1:
        raise ValueError("window must have positive size")
    return {
        (i, i + r - 1): zf.entry(i, i + r - 1)
        for r in range(rows)
        for i in range(col_start, col_start + cols)
    }


def check_zero_diamond(cells: Mapping[tuple[int, int], FieldElement]) -> ValidationReport:
    """Verify nonzero-ness and the zero diamond rule on every diamond whose
    four corners lie in the given cells."""
    if not cells:
        return ValidationReport()
    zero = next(iter(cells.values())).field.zero
    out = []
    for (i, j) in sorted(cells):
        if cells[(i, j)].is_zero:
            out.append(Violation(RULE_NONZERO, (i, j), cells[(i, j)], zero))
    for (i, j) in sorted(cells):
        if j < i:
            continue
        corners = [(i, j), (i + 1, j + 1), (i + 1, j), (i, j + 1)]
        if not all(c in cells for c in corners):
            continue
        lhs = cells[(i, j)] * cells[(i + 1, j + 1)] - cells[(i + 1, j)] * cells[(i, j + 1)]
        if not lhs.is_zero:
            out.append(Violation(RULE_ZERO_DIAMOND, (i, j), lhs, zero))
    return ValidationReport(tuple(out))


def rank1_factorize(
    cells: Mapping[tuple[int, int], FieldElement]
) -> tuple[dict[int, FieldElement], dict[int, FieldElement]]:
    """Factor the window as t[i,j] = a_i * b_j, normalized by a_{i0} = 1
    at the smallest row index i0.

    Raises :class:`FactorizationImpossibleError` when some generalized 2x2
    minor is nonzero (the cells are not a piece of a 0-frieze), and
    ValueError on zero entries or a disconnected window.
    """
    if not cells:
        raise ValueError("empty window")
    for idx, val in cells.items():
        if val.is_zero:
            raise ValueError(f"zero entry at {idx}; 0-frieze entries are nonzero")
    fd = next(iter(cells.values())).field
    i0 = min(i for i, _ in cells)
    a: dict[int, FieldElement] = {i0: fd.one}
    b: dict[int, FieldElement] = {}
    changed = True
    while changed:
        changed = False
        for (i, j), val in cells.items():
            if i in a and j not in b:
                b[j] = val / a[i]
                changed = True
            elif j in b and i not in a:
                a[i] = val / b[j]
                changed = True
    missing = [(i, j) for (i, j) in cells if i not in a or j not in b]
    if missing:
        raise ValueError(f"window is not connected: cannot reach {missing[0]}")
    for (i, j), val in sorted(cells.items()):
        if val != a[i] * b[j]:
            raise FactorizationImpossibleError((i, j))
    return a, b

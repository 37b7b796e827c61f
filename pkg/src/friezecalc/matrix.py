"""Frieze matrices: construction, validation, triangulation, determinants.

A frieze matrix is a symmetric n x n matrix over an exact field whose
entries vanish exactly on the diagonal and satisfy the generalized diamond
rule

    m[i,j]*m[i+1,j+1] - m[i+1,j]*m[i,j+1] = m[i,i+1]*m[j,j+1]

for 1 <= i, i+1 <= j <= n-1.  Such a matrix is fully determined by its
first two off-diagonals x_i = m[i,i+1] and y_i = m[i,i+2].  All public
indices are 1-based, matching the conventional notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ZeroEntryError
from .field import FieldDescriptor, FieldElement, _join, format_element

__all__ = [
    "EliminationTrace",
    "FriezeMatrix",
    "SeedData",
    "TriangularMatrix",
    "ValidationReport",
    "Violation",
    "build_from_seeds",
    "check_ptolemy",
    "check_t_properties",
    "det_closed_form",
    "det_cofactor",
    "det_elimination",
    "reconstruct_entry",
    "triangulate",
    "validate",
]

# Rule identifiers used in validation reports.
RULE_SYMMETRY = "symmetry"
RULE_ZERO_DIAGONAL = "zero_diagonal"
RULE_NONZERO_OFF_DIAGONAL = "nonzero_off_diagonal"
RULE_DIAMOND = "diamond"
RULE_PTOLEMY = "ptolemy"
RULE_ZERO_DIAMOND = "zero_diamond"
RULE_DIAGONAL_RELATION = "diagonal_relation"


@dataclass(frozen=True)
class Violation:
    """One failed rule: both sides of the equation that should have held."""

    rule: str
    indices: tuple[int, ...]
    lhs: FieldElement
    rhs: FieldElement

    def __str__(self) -> str:
        return (
            f"{self.rule} at {self.indices}: "
            f"{format_element(self.lhs)} != {format_element(self.rhs)}"
        )


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def _common_field(entries) -> FieldDescriptor:
    fd = None
    for e in entries:
        fd = e.field if fd is None else _join(fd, e.field)
    if fd is None:
        raise ValueError("matrix has no entries")
    return fd


class FriezeMatrix:
    """Square matrix of exact field elements with 1-based access.

    Construction does not enforce the frieze rules, so candidate matrices
    (including deliberately broken fixtures) are representable; use
    :func:`validate` to obtain a rule-by-rule report.
    """

    __slots__ = ("_rows", "n", "field")

    def __init__(self, rows):
        grid = tuple(tuple(r) for r in rows)
        n = len(grid)
        if n < 2 or any(len(r) != n for r in grid):
            raise ValueError("matrix must be square with n >= 2")
        self._rows = grid
        self.n = n
        self.field = _common_field(e for r in grid for e in r)

    def entry(self, i: int, j: int) -> FieldElement:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) outside 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def rows(self) -> tuple[tuple[FieldElement, ...], ...]:
        return self._rows

    def x(self, i: int) -> FieldElement:
        """First off-diagonal entry m[i,i+1]."""
        return self.entry(i, i + 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FriezeMatrix):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"FriezeMatrix(n={self.n}, field={self.field})"


@dataclass(frozen=True)
class SeedData:
    """The determining data: n-1 values x_i and n-2 values y_i, all nonzero."""

    x: tuple[FieldElement, ...]
    y: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if len(self.x) < 1 or len(self.y) != len(self.x) - 1:
            raise ValueError("need len(x) = n-1 >= 1 and len(y) = n-2")
        if any(v.is_zero for v in self.x) or any(v.is_zero for v in self.y):
            raise ValueError("seed entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.x) + 1


def build_from_seeds(
    seeds: SeedData, field: FieldDescriptor | None = None
) -> FriezeMatrix:
    """Fill the matrix from x, y by repeated use of the diamond rule.

    Anti-diagonals are filled by increasing distance d = j - i, each new
    entry via  m[i,j] = (m[i,j-1]*m[i+1,j] - x_i*x_{j-1}) / m[i+1,j-1].
    Raises :class:`ZeroEntryError` (with the offending 1-based index) when
    a computed off-diagonal entry vanishes, i.e. the seeds generate no
    frieze matrix, and ZeroDivisionError if a divisor vanishes.
    """
    fd = field if field is not None else _common_field(seeds.x + seeds.y)
    n = seeds.n
    zero = fd.zero
    m: list[list[FieldElement]] = [[zero] * n for _ in range(n)]
    xs = seeds.x
    for t, v in enumerate(xs):
        m[t][t + 1] = m[t + 1][t] = v
    for t, v in enumerate(seeds.y):
        m[t][t + 2] = m[t + 2][t] = v
    for dist in range(3, n):
        for i in range(n - dist):
            j = i + dist
            denom = m[i + 1][j - 1]
            if denom.is_zero:
                raise ZeroDivisionError(
                    f"zero divisor at entry ({i + 2},{j}) during construction"
                )
            val = (m[i][j - 1] * m[i + 1][j] - xs[i] * xs[j - 1]) / denom
            if val.is_zero:
                raise ZeroEntryError(
                    (i + 1, j + 1),
                    f"seeds generate a zero entry at ({i + 1},{j + 1})",
                )
            m[i][j] = m[j][i] = val
    return FriezeMatrix(m)


def validate(m: FriezeMatrix) -> ValidationReport:
    """Check symmetry, the diagonal rules and every diamond instance.

    Every violated rule is reported with both sides of the failed
    equation; nothing is raised.
    """
    n = m.n
    zero = m.field.zero
    out: list[Violation] = []
    for i in range(1, n + 1):
        mii = m.entry(i, i)
        if not mii.is_zero:
            out.append(Violation(RULE_ZERO_DIAGONAL, (i, i), mii, zero))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if m.entry(i, j) != m.entry(j, i):
                out.append(
                    Violation(RULE_SYMMETRY, (i, j), m.entry(i, j), m.entry(j, i))
                )
            if m.entry(i, j).is_zero:
                out.append(
                    Violation(RULE_NONZERO_OFF_DIAGONAL, (i, j), zero, zero)
                )
    for i in range(1, n):
        for j in range(i + 1, n):
            lhs = m.entry(i, j) * m.entry(i + 1, j + 1) - m.entry(i + 1, j) * m.entry(i, j + 1)
            rhs = m.entry(i, i + 1) * m.entry(j, j + 1)
            if lhs != rhs:
                out.append(Violation(RULE_DIAMOND, (i, j), lhs, rhs))
    return ValidationReport(tuple(out))


def check_ptolemy(
    m: FriezeMatrix, quad: tuple[int, int, int, int] | None = None
) -> ValidationReport:
    """Check m[i,k]m[j,l] = m[i,j]m[k,l] + m[i,l]m[j,k].

    With ``quad`` given, checks that single quadruple (which must satisfy
    1 <= i <= j <= k <= l <= n, else IndexError); otherwise checks every
    quadruple, equalities included (those hold trivially).
    """
    n = m.n
    if quad is not None:
        i, j, k, l = quad
        if not (1 <= i <= j <= k <= l <= n):
            raise IndexError(
                f"quadruple {quad} must satisfy 1 <= i <= j <= k <= l <= {n}"
            )
        quads = [quad]
    else:
        quads = itertools.combinations_with_replacement(range(1, n + 1), 4)
    out = []
    for i, j, k, l in quads:
        lhs = m.entry(i, k) * m.entry(j, l)
        rhs = m.entry(i, j) * m.entry(k, l) + m.entry(i, l) * m.entry(j, k)
        if lhs != rhs:
            out.append(Violation(RULE_PTOLEMY, (i, j, k, l), lhs, rhs))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class TriangularMatrix:
    """Upper triangular companion of a frieze matrix.

    Rows 1 and 2 are rows 2 and 1 of the source; below them
    t[i,j] = -2*m[1,j]*m[i-1,i]/m[1,i-1] for j >= i and 0 otherwise.
    Its determinant is minus that of the source matrix.
    """

    rows: tuple[tuple[FieldElement, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> FieldDescriptor:
        return _common_field(e for r in self.rows for e in r)

    def entry(self, i: int, j: int) -> FieldElement:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def diagonal(self) -> tuple[FieldElement, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))


@dataclass(frozen=True)
class EliminationTrace:
    """The intermediate matrices of the row reduction, swap included.

    ``matrices[k]`` is the k-th stage (k = 0 is the row swap); the last
    stage equals the closed-form triangular matrix.  ``steps[k]`` is a
    human-readable description of the row operations producing stage k.
    """

    matrices: tuple[tuple[tuple[FieldElement, ...], ...], ...]
    steps: tuple[str, ...]


def _t_closed_form(m: FriezeMatrix) -> TriangularMatrix:
    n = m.n
    zero = m.field.zero
    minus2 = m.field.from_int(-2)
    rows: list[tuple[FieldElement, ...]] = [
        tuple(m.entry(2, j) for j in range(1, n + 1)),
        tuple(m.entry(1, j) for j in range(1, n + 1)),
    ]
    for i in range(3, n + 1):
        pivot = m.entry(1, i - 1)
        if pivot.is_zero:
            raise ZeroDivisionError(
                f"m[1,{i - 1}] = 0; input is not a frieze matrix"
            )
        coeff = minus2 * m.entry(i - 1, i) / pivot
        rows.append(
            tuple(zero for _ in range(i - 1))
            + tuple(coeff * m.entry(1, j) for j in range(i, n + 1))
        )
    return TriangularMatrix(tuple(rows))


def _snapshot(rows) -> tuple[tuple[FieldElement, ...], ...]:
    return tuple(tuple(r) for r in rows)


def _elimination_trace(m: FriezeMatrix) -> EliminationTrace:
    """Apply the literal row-operation schedule and record every stage.

    Multipliers are taken from the original matrix entries, not from the
    current pivots, so the trace certifies the prescribed schedule rather
    than generic Gaussian elimination.
    """
    n = m.n
    work = [list(r) for r in m.rows()]
    work[0], work[1] = work[1], work[0]
    mats = [_snapshot(work)]
    steps = ["swap rows 1 and 2"]

    def reduce_rows(pivot_row: int, coeff_of, targets) -> str:
        ops = []
        for i in targets:
            c = coeff_of(i)
            src = work[pivot_row - 1]
            work[i - 1] = [a - c * b for a, b in zip(work[i - 1], src)]
            ops.append(f"R{i} <- R{i} - ({format_element(c)})*R{pivot_row}")
        return "; ".join(ops) if ops else "no-op"

    x12 = m.entry(1, 2)
    steps.append(
        reduce_rows(1, lambda i: m.entry(1, i) / x12, range(3, n + 1))
    )
    mats.append(_snapshot(work))
    steps.append(
        reduce_rows(2, lambda i: m.entry(2, i) / x12, range(3, n + 1))
    )
    mats.append(_snapshot(work))
    for k in range(3, n):
        pivot = m.entry(1, k)
        if pivot.is_zero:
            raise ZeroDivisionError(f"m[1,{k}] = 0; input is not a frieze matrix")
        steps.append(
            reduce_rows(k, lambda i: m.entry(1, i) / pivot, range(k + 1, n + 1))
        )
        mats.append(_snapshot(work))
    return EliminationTrace(tuple(mats[: n]), tuple(steps[: n]))


def triangulate(
    m: FriezeMatrix, keep_trace: bool = False
) -> tuple[TriangularMatrix, EliminationTrace | None]:
    """Closed-form triangular companion, optionally with the full trace.

    The trace is produced by actually performing the row operations, so it
    is an independent path: its last stage must coincide with the closed
    form whenever the input is a genuine frieze matrix.
    """
    t = _t_closed_form(m)
    trace = _elimination_trace(m) if keep_trace else None
    return t, trace


def det_closed_form(m: FriezeMatrix) -> FieldElement:
    """-(-2)^(n-2) * m[1,n] * product of the x_i; needs a valid input."""
    n = m.n
    acc = m.entry(1, n)
    for i in range(1, n):
        acc = acc * m.entry(i, i + 1)
    return -(m.field.from_int(-2) ** (n - 2)) * acc


def _as_grid(m) -> list[list[FieldElement]]:
    if isinstance(m, FriezeMatrix):
        return [list(r) for r in m.rows()]
    if isinstance(m, TriangularMatrix):
        return [list(r) for r in m.rows]
    return [list(r) for r in m]


def det_elimination(m) -> FieldElement:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Works on any square matrix of field elements: frieze matrices, their
    triangular companions, or a plain grid.  Row swaps are tracked and a
    fully zero pivot column short-circuits to zero.
    """
    a = _as_grid(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    fd = _common_field(e for r in a for e in r)
    if n == 1:
        return a[0][0]
    sign = 1
    prev = fd.one
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not a[r][k].is_zero), None)
        if pivot_row is None:
            return fd.zero
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = fd.zero
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def det_cofactor(m) -> FieldElement:
    """Exact determinant by first-row cofactor expansion (small n only)."""
    a = _as_grid(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    fd = _common_field(e for r in a for e in r)

    def expand(rows, cols):
        if len(cols) == 1:
            return a[rows[0]][cols[0]]
        top = rows[0]
        rest = rows[1:]
        acc = fd.zero
        for t, c in enumerate(cols):
            if a[top][c].is_zero:
                continue
            sub = expand(rest, cols[:t] + cols[t + 1:])
            term = a[top][c] * sub
            acc = acc + term if t % 2 == 0 else acc - term
        return acc

    return expand(tuple(range(n)), tuple(range(n)))


def reconstruct_entry(m: FriezeMatrix, i: int, j: int) -> FieldElement:
    """Recover m[i,j] from the first two rows and the x_t alone.

    m[i,j] = m[1,i]m[2,j]/m[1,2] + m[2,i]m[1,j]/m[1,2]
             - 2 * sum_{t=3..i} m[1,i]m[1,j]m[t-1,t] / (m[1,t]m[1,t-1])

    defined for 3 <= i <= n and i <= j <= n.
    """
    n = m.n
    if not (3 <= i <= n) or not (i <= j <= n):
        raise IndexError(f"need 3 <= i <= j <= {n}, got ({i},{j})")
    e = m.entry
    x12 = e(1, 2)
    acc = e(1, i) * e(2, j) / x12 + e(2, i) * e(1, j) / x12
    s = m.field.zero
    for t in range(3, i + 1):
        s = s + e(1, i) * e(1, j) * e(t - 1, t) / (e(1, t) * e(1, t - 1))
    return acc - m.field.from_int(2) * s


def check_t_properties(t: TriangularMatrix, m: FriezeMatrix) -> ValidationReport:
    """Verify the two structural identities of the triangular companion.

    (a) every neighbouring 2x2 determinant above the diagonal vanishes:
        t[i,j]t[i+1,j+1] - t[i+1,j]t[i,j+1] = 0 for i >= 2, j >= i+1;
    (b) t[i,i]t[i+1,i+1] + 2*m[i,i+1]*t[i,i+1] = 0 for i >= 2.
    """
    n = t.n
    zero = m.field.zero
    two = m.field.from_int(2)
    out = []
    for i in range(2, n):
        for j in range(i + 1, n):
            lhs = t.entry(i, j) * t.entry(i + 1, j + 1) - t.entry(i + 1, j) * t.entry(i, j + 1)
            if not lhs.is_zero:
                out.append(Violation(RULE_ZERO_DIAMOND, (i, j), lhs, zero))
    for i in range(2, n):
        lhs = t.entry(i, i) * t.entry(i + 1, i + 1) + two * m.entry(i, i + 1) * t.entry(i, i + 1)
        if not lhs.is_zero:
            out.append(Violation(RULE_DIAGONAL_RELATION, (i,), lhs, zero))
    return ValidationReport(tuple(out))

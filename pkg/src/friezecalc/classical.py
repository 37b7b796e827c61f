"""Classical finite friezes and minor matrices, with determinant checks.

Two families of frieze matrices with known determinants:

* Conway-Coxeter: for a quiddity sequence (a_1..a_k) coming from a polygon
  triangulation, the matrix built from x = 1, y_i = a_i has the corner
  entry m[1,k] = 1 and determinant -(-2)^(k-2).
* 2 x n minor matrices: A[i,j] = the 2x2 column minor D_{min,max} of a
  2 x n matrix; its determinant is -(-2)^(n-2)*D_{1n}*prod(D_{i,i+1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderViolationError, ZeroMinorError
from .field import RATIONAL, FieldElement, _join
from .matrix import (
    FriezeMatrix,
    SeedData,
    build_from_seeds,
    det_closed_form,
    det_elimination,
)

__all__ = [
    "DetCheckReport",
    "QuiddityData",
    "Triangulation",
    "TwoRowMatrix",
    "baur_marsh_det_check",
    "cc_det_check",
    "cc_matrix",
    "delta_minor_matrix",
    "quiddity_from_triangulation",
]


@dataclass(frozen=True)
class QuiddityData:
    """A candidate quiddity sequence: k >= 3 positive integers."""

    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        if len(self.a) < 3:
            raise ValueError("quiddity sequences have length k >= 3")
        if any(v < 1 for v in self.a):
            raise ValueError("quiddity entries must be positive integers")

    @property
    def k(self) -> int:
        return len(self.a)

    def rotated(self, shift: int = 1) -> "QuiddityData":
        s = shift % self.k
        return QuiddityData(self.a[s:] + self.a[:s])


def _crossing(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    p, q = d1
    r, s = d2
    return (p < r < q < s) or (r < p < s < q)


@dataclass(frozen=True)
class Triangulation:
    """A full triangulation of a convex k-gon: k-3 non-crossing diagonals.

    Vertices are 1..k; each diagonal is stored as an ordered pair (p, q)
    with p < q.
    """

    k: int
    diagonals: frozenset[tuple[int, int]]

    def __post_init__(self):
        diags = frozenset(tuple(sorted(d)) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        if self.k < 3:
            raise ValueError("polygon needs k >= 3 vertices")
        if len(diags) != self.k - 3:
            raise ValueError(
                f"a {self.k}-gon triangulation has {self.k - 3} diagonals, "
                f"got {len(diags)}"
            )
        for p, q in diags:
            if not (1 <= p < q <= self.k) or q - p < 2 or (p, q) == (1, self.k):
                raise ValueError(f"({p},{q}) is not a diagonal of a {self.k}-gon")
        diag_list = sorted(diags)
        for idx, d1 in enumerate(diag_list):
            for d2 in diag_list[idx + 1:]:
                if _crossing(d1, d2):
                    raise ValueError(f"diagonals {d1} and {d2} cross")

    def triangles(self) -> list[tuple[int, int, int]]:
        """The k-2 triangles, as vertex triples.

        Because the diagonals are non-crossing, every 3-clique of boundary
        edges plus diagonals bounds a face, so clique enumeration suffices.
        """
        edges = set(self.diagonals)
        for i in range(1, self.k):
            edges.add((i, i + 1))
        edges.add((1, self.k))
        out = []
        for p in range(1, self.k + 1):
            for q in range(p + 1, self.k + 1):
                if (p, q) not in edges:
                    continue
                for s in range(q + 1, self.k + 1):
                    if (p, s) in edges and (q, s) in edges:
                        out.append((p, q, s))
        if len(out) != self.k - 2:
            raise ValueError("triangulation does not decompose into k-2 triangles")
        return out


def quiddity_from_triangulation(t: Triangulation) -> QuiddityData:
    """a_i = number of triangles at vertex i; the counts sum to 3(k-2)."""
    counts = [0] * t.k
    for tri in t.triangles():
        for v in tri:
            counts[v - 1] += 1
    return QuiddityData(tuple(counts))


def cc_matrix(q: QuiddityData) -> FriezeMatrix:
    """Frieze matrix of a finite frieze of order k: x = 1, y_i = a_i.

    Raises :class:`OrderViolationError` when the corner entry m[1,k] is not
    1, i.e. the sequence is not a genuine quiddity sequence; construction
    may also hit a zero entry for bad sequences.
    """
    one = RATIONAL.one
    seeds = SeedData(
        tuple(one for _ in range(q.k - 1)),
        tuple(RATIONAL.from_int(v) for v in q.a[: q.k - 2]),
    )
    m = build_from_seeds(seeds, RATIONAL)
    if m.entry(1, q.k) != one:
        raise OrderViolationError(
            f"m[1,{q.k}] = {m.entry(1, q.k)} != 1: not a quiddity sequence of order {q.k}"
        )
    return m


@dataclass(frozen=True)
class DetCheckReport:
    """Closed-form determinant, elimination oracle, and the expected value."""

    det: FieldElement
    det_oracle: FieldElement
    expected: FieldElement

    @property
    def ok(self) -> bool:
        return self.det == self.det_oracle == self.expected


def cc_det_check(q: QuiddityData) -> DetCheckReport:
    """Both determinant routes against the expected -(-2)^(k-2)."""
    m = cc_matrix(q)
    expected = -(RATIONAL.from_int(-2) ** (q.k - 2))
    return DetCheckReport(det_closed_form(m), det_elimination(m), expected)


@dataclass(frozen=True)
class TwoRowMatrix:
    """A 2 x n matrix given by its two rows; n >= 2."""

    top: tuple[FieldElement, ...]
    bottom: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom) or len(self.top) < 2:
            raise ValueError("need two rows of equal length n >= 2")

    @property
    def n(self) -> int:
        return len(self.top)

    @property
    def field(self):
        fd = None
        for v in self.top + self.bottom:
            fd = v.field if fd is None else _join(fd, v.field)
        return fd

    def minor(self, i: int, j: int) -> FieldElement:
        """Column minor D_ij = a_i*b_j - a_j*b_i, 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"columns ({i},{j}) outside 1..{self.n}")
        return self.top[i - 1] * self.bottom[j - 1] - self.top[j - 1] * self.bottom[i - 1]


def delta_minor_matrix(x: TwoRowMatrix) -> FriezeMatrix:
    """Symmetric matrix of column minors: A[i,j] = D_{min(i,j),max(i,j)}.

    The minors satisfy the Ptolemy relation identically, so the result is a
    frieze matrix whenever no off-diagonal minor vanishes; a vanishing one
    raises :class:`ZeroMinorError` with the offending column pair.
    """
    n = x.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if x.minor(i, j).is_zero:
                raise ZeroMinorError(i, j)
    grid = [
        [x.minor(min(i, j), max(i, j)) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return FriezeMatrix(grid)


def baur_marsh_det_check(x: TwoRowMatrix) -> DetCheckReport:
    """Both determinant routes against -(-2)^(n-2)*D_{1n}*prod(D_{i,i+1})."""
    a = delta_minor_matrix(x)
    n = x.n
    acc = x.minor(1, n)
    for i in range(1, n):
        acc = acc * x.minor(i, i + 1)
    expected = -(x.field.from_int(-2) ** (n - 2)) * acc
    return DetCheckReport(det_closed_form(a), det_elimination(a), expected)

"""Lazily evaluated infinite frieze patterns with coefficients.

An infinite frieze is a Z^2-indexed array f[i,j] (j >= i) with f[i,i] = 0,
all other entries nonzero, and every diamond satisfying

    f[i,j]*f[i+1,j+1] - f[i+1,j]*f[i,j+1] = f[i,i+1]*f[j,j+1].

It is determined by its first two nontrivial rows x_i = f[i,i+1] and
y_i = f[i,i+2].  Entries are computed on demand along anti-diagonals and
memoized; a zero entry below the second row is an error, raised eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WindowExceededError, ZeroEntryError
from .field import FieldDescriptor, FieldElement, _join
from .matrix import FriezeMatrix

__all__ = [
    "ConeSpec",
    "FriezeSeeds",
    "InfiniteFrieze",
    "SeedRow",
    "cone_entries",
    "detect_period",
    "extract_m_minus",
    "extract_m_plus",
]


class SeedRow:
    """A row of nonzero values indexed by Z.

    Either a periodic cycle (total on Z) or a finite table with a declared
    window; reading outside the window raises, it is never extrapolated.
    """

    __slots__ = ("values", "start")

    def __init__(self, values, start: int | None = None):
        self.values = tuple(values)
        self.start = start
        if not self.values:
            raise ValueError("seed row needs at least one value")
        if any(v.is_zero for v in self.values):
            raise ValueError("seed row values must be nonzero")

    @classmethod
    def cycle(cls, values) -> "SeedRow":
        return cls(values, start=None)

    @classmethod
    def table(cls, start: int, values) -> "SeedRow":
        return cls(values, start=start)

    @property
    def is_cycle(self) -> bool:
        return self.start is None

    def value(self, i: int) -> FieldElement:
        if self.start is None:
            return self.values[i % len(self.values)]
        if not (self.start <= i < self.start + len(self.values)):
            raise WindowExceededError(i, self.start, self.start + len(self.values))
        return self.values[i - self.start]

    def field(self) -> FieldDescriptor:
        fd = self.values[0].field
        for v in self.values[1:]:
            fd = _join(fd, v.field)
        return fd


@dataclass(frozen=True)
class FriezeSeeds:
    """First-two-row data of a frieze: x and y rows plus the field."""

    x: SeedRow
    y: SeedRow
    field: FieldDescriptor


@dataclass(frozen=True)
class ConeSpec:
    """The cone of the entry (i, j): all f[x,y] with i <= x <= y <= j."""

    i: int
    j: int

    def __post_init__(self):
        if self.j < self.i:
            raise ValueError("cone needs j >= i")


class InfiniteFrieze:
    """Memoized evaluator for the entries f[i,j] of a frieze.

    Evaluation order never changes values: the memo is filled along
    anti-diagonals by the fixed recurrence

        f[i,j] = (f[i,j-1]*f[i+1,j] - x_i*x_{j-1}) / f[i+1,j-1].

    The memo fill is idempotent (the recurrence is deterministic over
    immutable values), so behaviour is that of a pure function; instances
    carry no locks, give each thread its own or share read-only.
    """

    def __init__(self, seeds: FriezeSeeds):
        self.seeds = seeds
        self._memo: dict[tuple[int, int], FieldElement] = {}

    @property
    def field(self) -> FieldDescriptor:
        return self.seeds.field

    def x(self, i: int) -> FieldElement:
        return self.seeds.x.value(i)

    def y(self, i: int) -> FieldElement:
        return self.seeds.y.value(i)

    def _base(self, i: int, j: int) -> FieldElement:
        if j == i:
            return self.field.zero
        if j == i + 1:
            return self.x(i)
        return self.y(i)

    def _get(self, i: int, j: int) -> FieldElement:
        if j - i <= 2:
            return self._base(i, j)
        return self._memo[(i, j)]

    def entry(self, i: int, j: int) -> FieldElement:
        if j < i:
            raise ValueError(f"frieze entries need j >= i, got ({i},{j})")
        if j - i <= 2:
            return self._base(i, j)
        memo = self._memo
        if (i, j) in memo:
            return memo[(i, j)]
        for dist in range(3, j - i + 1):
            for a in range(i, j - dist + 1):
                if (a, a + dist) in memo:
                    continue
                num = (
                    self._get(a, a + dist - 1) * self._get(a + 1, a + dist)
                    - self.x(a) * self.x(a + dist - 1)
                )
                val = num / self._get(a + 1, a + dist - 1)
                if val.is_zero:
                    raise ZeroEntryError(
                        (a, a + dist),
                        f"frieze entry ({a},{a + dist}) is zero; "
                        "the seeds generate no frieze",
                    )
                memo[(a, a + dist)] = val
        return memo[(i, j)]


def cone_entries(
    f: InfiniteFrieze, spec: ConeSpec
) -> list[tuple[tuple[int, int], FieldElement]]:
    """All entries of the cone, row-major by x then y."""
    return [
        ((a, b), f.entry(a, b))
        for a in range(spec.i, spec.j + 1)
        for b in range(a, spec.j + 1)
    ]


def extract_m_plus(f: InfiniteFrieze, k: int, n: int) -> FriezeMatrix:
    """n x n matrix whose lower triangle is the cone of f[k, k+n-1].

    Entry (i, j) with j <= i is f[k+j-1, k+i-1]; the upper triangle is the
    symmetric extension.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    grid = [
        [
            f.entry(k + min(i, j) - 1, k + max(i, j) - 1)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    return FriezeMatrix(grid)


def extract_m_minus(f: InfiniteFrieze, k: int, n: int) -> FriezeMatrix:
    """Mirror of :func:`extract_m_plus`, built from the cone of f[k-n+2, k+1].

    Entry (i, j) with i <= j is f[k-j+2, k-i+2].
    """
    if n < 2:
        raise ValueError("need n >= 2")
    grid = [
        [
            f.entry(k - max(i, j) + 2, k - min(i, j) + 2)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    return FriezeMatrix(grid)


def detect_period(
    f: InfiniteFrieze, max_period: int, depth: int, col_start: int = 0
) -> int | None:
    """Smallest P <= max_period with f[i,j] = f[i+P,j+P] on a finite window.

    The certificate window is rows 1..depth and columns i in
    [col_start, col_start + max_period]; periodicity is certified on that
    window only, which is all finite data can support.
    """
    if max_period < 1 or depth < 1:
        raise ValueError("max_period and depth must be positive")
    for period in range(1, max_period + 1):
        if all(
            f.entry(i, i + r) == f.entry(i + period, i + period + r)
            for r in range(1, depth + 1)
            for i in range(col_start, col_start + max_period + 1)
        ):
            return period
    return None

"""Exact elements of Q and of quadratic extensions Q(sqrt(d)).

Every value is an immutable pair of rationals (a, b) denoting a + b*sqrt(d),
with b = 0 forced over plain Q.  All arithmetic is exact; there is no
floating point anywhere.  Rationals are kept in lowest terms with positive
denominator (``fractions.Fraction`` guarantees this), and d is required to
be a non-square integer so that a + b*sqrt(d) = 0 iff a = b = 0.

Text grammar for parsing/formatting::

    expr := term (('+'|'-') term)*
    term := rat | rat? '*'? 'sqrt(' int ')'
    rat  := int ('/' posint)?
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ElementSyntaxError",
    "FieldDescriptor",
    "FieldElement",
    "FieldMismatchError",
    "RATIONAL",
    "format_element",
    "parse_element",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class FieldMismatchError(ValueError):
    """Two elements live in different fields and neither embeds in the other."""


class ElementSyntaxError(ValueError):
    """An element string does not match the grammar or names the wrong radical."""


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True)
class FieldDescriptor:
    """The coefficient field: plain rationals (d is None) or Q(sqrt(d)).

    d may be negative; the only requirement is that it is not a perfect
    square (and not 0 or 1), which keeps sqrt(d) irrational.
    """

    d: int | None = None

    def __post_init__(self):
        if self.d is not None and (self.d in (0, 1) or _is_square(self.d)):
            raise ValueError(
                f"d={self.d} is a square; the extension would collapse to Q"
            )

    @property
    def kind(self) -> str:
        return "rational" if self.d is None else "quadratic"

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def element(self, a, b=0) -> "FieldElement":
        return FieldElement(Fraction(a), Fraction(b), self)

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(Fraction(n), _ZERO, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(_ZERO, _ZERO, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(_ONE, _ZERO, self)

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"


RATIONAL = FieldDescriptor()


def _join(f1: FieldDescriptor, f2: FieldDescriptor) -> FieldDescriptor:
    """Common field of two descriptors; Q embeds into any Q(sqrt(d))."""
    if f1.d == f2.d:
        return f1
    if f1.d is None:
        return f2
    if f2.d is None:
        return f1
    raise FieldMismatchError(f"cannot mix elements of {f1} and {f2}")


@dataclass(frozen=True, eq=False)
class FieldElement:
    """Immutable a + b*sqrt(d); plain rational when the field is Q."""

    a: Fraction
    b: Fraction
    field: FieldDescriptor

    def __post_init__(self):
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", Fraction(self.b))
        if self.field.is_rational and self.b != 0:
            raise FieldMismatchError("rational element cannot carry a sqrt part")

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(Fraction(other), _ZERO, self.field)
        return None

    def __add__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        fd = _join(self.field, o.field)
        return FieldElement(self.a + o.a, self.b + o.b, fd)

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.a, -self.b, self.field)

    def __mul__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        fd = _join(self.field, o.field)
        if fd.is_rational:
            return FieldElement(self.a * o.a, _ZERO, fd)
        d = fd.d
        return FieldElement(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            fd,
        )

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero element")
        if self.field.is_rational:
            return FieldElement(1 / self.a, _ZERO, self.field)
        # Nonzero norm is guaranteed because d is a non-square.
        norm = self.a * self.a - self.field.d * self.b * self.b
        return FieldElement(self.a / norm, -self.b / norm, self.field)

    def __truediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inv() ** (-k)
        out = FieldElement(_ONE, _ZERO, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        _join(self.field, o.field)  # reject cross-field comparison
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{format_element(self)}>"


def format_element(x: FieldElement, compact: bool = False) -> str:
    """Canonical string; round-trips through :func:`parse_element`.

    ``compact`` omits spaces so the result is a single whitespace-free token
    (used by the grid text format).
    """
    if x.b == 0:
        return str(x.a)
    d = x.field.d
    sep = "" if compact else " "

    def radical(c: Fraction) -> str:
        return f"sqrt({d})" if c == 1 else f"{c}*sqrt({d})"

    if x.a == 0:
        return radical(x.b) if x.b > 0 else "-" + radical(-x.b)
    sign = "+" if x.b > 0 else "-"
    return f"{x.a}{sep}{sign}{sep}{radical(abs(x.b))}"


_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<sqrt>sqrt\(\s*(?P<arg>-?\d+)\s*\))
      | (?P<num>\d+(?:/\d+)?)
      | (?P<op>[+\-*])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ElementSyntaxError(f"unexpected input at {text[pos:]!r}")
        if m.group("sqrt") is not None:
            tokens.append(("sqrt", int(m.group("arg"))))
        elif m.group("num") is not None:
            tokens.append(("num", Fraction(m.group("num"))))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def parse_element(text: str, field: FieldDescriptor) -> FieldElement:
    """Parse an element string in the grammar above, canonicalized.

    Raises :class:`ElementSyntaxError` on malformed input or when a sqrt
    term names a radical other than the field's d, and ZeroDivisionError
    on a zero denominator.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ElementSyntaxError("empty element string")
    a = _ZERO
    b = _ZERO
    pos = 0
    first = True
    while pos < len(tokens):
        sign = 1
        kind, value = tokens[pos]
        if kind == "op":
            if value == "*":
                raise ElementSyntaxError("term may not start with '*'")
            if value == "-":
                sign = -1
            pos += 1
        elif not first:
            raise ElementSyntaxError("terms must be joined by '+' or '-'")
        coeff: Fraction | None = None
        arg: int | None = None
        if pos < len(tokens) and tokens[pos][0] == "num":
            coeff = tokens[pos][1]
            pos += 1
            if pos < len(tokens) and tokens[pos] == ("op", "*"):
                pos += 1
                if pos >= len(tokens) or tokens[pos][0] != "sqrt":
                    raise ElementSyntaxError("'*' must be followed by sqrt(...)")
        if pos < len(tokens) and tokens[pos][0] == "sqrt":
            arg = tokens[pos][1]
            pos += 1
        if coeff is None and arg is None:
            raise ElementSyntaxError("expected a term")
        if arg is not None:
            if field.is_rational or arg != field.d:
                raise ElementSyntaxError(
                    f"sqrt({arg}) does not belong to {field}"
                )
            b += sign * (coeff if coeff is not None else _ONE)
        else:
            a += sign * coeff
        first = False
    return FieldElement(a, b, field)

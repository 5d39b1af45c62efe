"""Exact linear forms a + b*t over the rationals, with evaluation ordering.

All degrees and multiplicities handled by the reduction algorithms are
polynomials of degree at most one in a single indeterminate t, with rational
coefficients.  They are compared by evaluating at a fixed small positive
rational tau; exact `fractions.Fraction` arithmetic is used throughout, so no
comparison ever goes through floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p"/"p/q" string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"not a rational literal: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


def format_rational(x: Fraction) -> str:
    """Render as "p" or "p/q" (lowest terms, positive denominator)."""
    return str(x)


@dataclass(frozen=True)
class LinForm:
    """Linear polynomial ``a + b*t`` with exact rational coefficients."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact value a + b*x."""
        return self.a + self.b * as_rational(x)

    def root(self) -> Fraction | None:
        """The zero -a/b of the form, or None for constants (b = 0)."""
        if self.b == 0:
            return None
        return -self.a / self.b

    def __add__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "LinForm") -> "LinForm":
        return LinForm(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "LinForm":
        return LinForm(-self.a, -self.b)

    def __mul__(self, c: RationalLike) -> "LinForm":
        c = as_rational(c)
        return LinForm(self.a * c, self.b * c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_linform(self)

    @classmethod
    def parse(cls, text: str) -> "LinForm":
        return parse_linform(text)

    @classmethod
    def const(cls, x: RationalLike) -> "LinForm":
        return cls(as_rational(x), Fraction(0))


def tau_compare(f: LinForm, g: LinForm, tau: RationalLike) -> int:
    """Sign of f(tau) - g(tau): -1, 0 or +1.

    This is the total preorder used to sort multiplicities; polynomially
    distinct forms may compare equal at a particular tau.
    """
    d = f(tau) - g(tau)
    return (d > 0) - (d < 0)


def tau_sort_key(f: LinForm, tau: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Sort key (value at tau, a, b); the coefficient pair is a deterministic
    tiebreak between tau-equal but polynomially distinct forms."""
    return (f(tau), f.a, f.b)


_COEFF = r"\d+(?:/\d+)?"
_PURE_T_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<b>{_COEFF})?t$")
_FULL_RE = re.compile(rf"^(?P<a>[+-]?{_COEFF})(?P<sign>[+-])(?P<b>{_COEFF})?t$")


def parse_linform(text: str) -> LinForm:
    """Parse "a", "bt" or "a+bt"/"a-bt" with rational coefficients.

    Accepts the same grammar the trace output uses, e.g. "6-2t", "3t", "7",
    "-8+141t", "t", "-t", "3/5045".
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty linear-form literal")
    if "t" not in s:
        return LinForm(as_rational(s))
    m = _PURE_T_RE.match(s)
    if m:
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
        return LinForm(Fraction(0), b)
    m = _FULL_RE.match(s)
    if m:
        a = Fraction(m.group("a"))
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
        return LinForm(a, b)
    raise ValueError(f"not a linear-form literal: {text!r}")


def format_linform(f: LinForm) -> str:
    """Render as "a", "bt" or "a+bt"/"a-bt", e.g. "6-2t", "3t", "-8+141t"."""
    if f.b == 0:
        return str(f.a)
    bmag = abs(f.b)
    tpart = "t" if bmag == 1 else f"{bmag}t"
    if f.a == 0:
        return tpart if f.b > 0 else f"-{tpart}"
    sign = "+" if f.b > 0 else "-"
    return f"{f.a}{sign}{tpart}"

"""Closed-form lower bounds for Waldschmidt constants of very general lines.

Three specialization arguments give integer lower bounds for the Waldschmidt
constant of s very general lines in P^3:

  * square_specialization_bound: put k^2 of the lines onto k planes (k lines
    each); any q with (q - k)^2 <= s - k^2 for some 1 <= k <= sqrt(s) is a
    lower bound.
  * sqrt_lower_bound: the closed form floor(sqrt(2s - 1)), always admissible
    for the previous condition.
  * plane_degeneration_bound: put k lines onto each of q planes; any q with
    q*k <= s and (q - k)^2 <= s - k is a lower bound.

A condition count caps the initial degree alpha(s) of the ideal of the lines
by (alpha + 2)(alpha + 1) <= 6s, and the Chudnovsky-type inequality
alphahat >= (alpha + 1)/2 follows from the bounds above; chudnovsky_verify
checks the whole inequality chain exactly.  The strong bound
floor(sqrt(2.5 s)) holds for every s except 4, 7 and 10: by an exact integer
check for s >= 490 and by running the degeneration loop below that.

Everything here is exact integer/rational arithmetic; the only approximate
quantity anywhere is the rendered decimal of a cubic root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cubic import AsymptoticCubic, RootBracket, largest_root
from .linform import RationalLike, as_rational
from .space import certify_lower_bound

__all__ = [
    "square_specialization_bound",
    "sqrt_lower_bound",
    "plane_degeneration_bound",
    "alpha_max",
    "chudnovsky_bound",
    "chudnovsky_verify",
    "small_waldschmidt",
    "StrongBoundStatus",
    "strong_bound_closed_form_ok",
    "strong_sqrt_check",
    "STRONG_BOUND_EXCEPTIONS",
    "AsymptoticCubic",
    "RootBracket",
    "largest_root",
]


def square_specialization_bound(s: int) -> int:
    """Largest q such that (q - k)^2 <= s - k^2 for some 1 <= k <= sqrt(s)."""
    if s < 1:
        raise ValueError("s must be positive")
    best = 1
    for k in range(1, math.isqrt(s) + 1):
        q = k + math.isqrt(s - k * k)
        best = max(best, q)
    return best


def sqrt_lower_bound(s: int) -> int:
    """floor(sqrt(2s - 1)), computed with exact integer arithmetic."""
    if s < 1:
        raise ValueError("s must be positive")
    return math.isqrt(2 * s - 1)


def plane_degeneration_bound(s: int) -> int:
    """Largest q such that q*k <= s and (q - k)^2 <= s - k for some k >= 0.

    Any maximizing pair has k <= sqrt(s) (larger k forces q <= sqrt(s),
    already achieved at k = 0), so the search space is small.
    """
    if s < 1:
        raise ValueError("s must be positive")
    best = math.isqrt(s)  # k = 0
    for k in range(1, math.isqrt(s) + 1):
        q = min(k + math.isqrt(s - k), s // k)
        best = max(best, q)
    return best


def alpha_max(s: int) -> int:
    """Largest alpha >= 1 with (alpha + 2)(alpha + 1) <= 6s.

    Counting conditions imposed by s lines on forms of degree alpha - 1 shows
    the initial degree of the ideal of the lines cannot exceed this value.
    """
    if s < 1:
        raise ValueError("s must be positive")
    a = (math.isqrt(24 * s + 1) - 3) // 2
    while (a + 3) * (a + 2) <= 6 * s:
        a += 1
    while a > 1 and (a + 2) * (a + 1) > 6 * s:
        a -= 1
    return a


def chudnovsky_bound(s: int) -> Fraction:
    """(alpha_max(s) + 1) / 2, the strongest Chudnovsky-type requirement any
    feasible initial degree can impose."""
    return Fraction(alpha_max(s) + 1, 2)


def small_waldschmidt(s: int) -> Fraction:
    """Known exact Waldschmidt constants for 1 <= s <= 5."""
    known = {
        1: Fraction(1),
        2: Fraction(2),
        3: Fraction(2),
        4: Fraction(8, 3),
        5: Fraction(10, 3),
    }
    if s not in known:
        raise ValueError(f"exact value only known for s in 1..5, got {s}")
    return known[s]


def chudnovsky_verify(s_max: int) -> list[str]:
    """Exact sweep of the Chudnovsky-type inequality chain up to s_max.

    For each s checks that the best of the three closed-form lower bounds
    reaches (alpha_max(s) + 1)/2, and that for every a >= 10 with
    (a + 2)(a + 1) <= 6s the inequality sqrt(2s - 1) - 1 >= (a + 1)/2 holds
    (equivalently 8s - 4 >= (a + 3)^2, checked in integers).  Returns a list
    of violation descriptions; empty means the chain holds everywhere.
    """
    if s_max < 1:
        raise ValueError("s_max must be positive")
    violations: list[str] = []
    for s in range(1, s_max + 1):
        need = chudnovsky_bound(s)
        have = max(
            square_specialization_bound(s),
            sqrt_lower_bound(s),
            plane_degeneration_bound(s),
        )
        if Fraction(have) < need:
            violations.append(f"s={s}: best closed-form bound {have} < {need}")
        for a in range(10, alpha_max(s) + 1):
            if (a + 2) * (a + 1) <= 6 * s and 8 * s - 4 < (a + 3) ** 2:
                violations.append(f"s={s}, a={a}: 8s-4 < (a+3)^2")
    return violations


STRONG_BOUND_EXCEPTIONS = frozenset({4, 7, 10})

_CLOSED_FORM_MIN_S = 490


@dataclass(frozen=True)
class StrongBoundStatus:
    holds: bool
    method: str  # "closed-form" | "algorithm-L" | "known-exception"


def strong_bound_closed_form_ok(s: int) -> bool:
    """Exact check of the plane-degeneration conditions at q = floor(sqrt(2.5s)),
    k = floor(sqrt(0.4s))."""
    q = math.isqrt(5 * s // 2)
    k = math.isqrt(2 * s // 5)
    return q * k <= s and (q - k) ** 2 <= s - k


def strong_sqrt_check(s: int, tau: RationalLike) -> StrongBoundStatus:
    """Is the bound floor(sqrt(2.5 s)) certified for this s?

    s = 4, 7 and 10 are the known exceptions (for s = 4 the bound is simply
    false; for 7 and 10 it is open).  For s >= 490 the closed-form conditions
    hold; below that the degeneration loop is run at delta = floor(sqrt(2.5s)).
    A False answer from the loop means "not certified by this method", not a
    disproof.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if s in STRONG_BOUND_EXCEPTIONS:
        return StrongBoundStatus(False, "known-exception")
    if s >= _CLOSED_FORM_MIN_S:
        return StrongBoundStatus(strong_bound_closed_form_ok(s), "closed-form")
    delta = math.isqrt(5 * s // 2)
    answer = certify_lower_bound(delta, s, as_rational(tau)).answer
    return StrongBoundStatus(answer, "algorithm-L")

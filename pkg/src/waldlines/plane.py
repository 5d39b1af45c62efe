"""Reduction of symbolic plane linear systems by Cremona moves and merges.

A plane system L2(d(t); m_1(t), ..., m_r(t)) records divisors of degree d(t)
in the plane with prescribed multiplicities m_j(t) at very general points;
degree and multiplicities are linear forms in t.  The reduction loop below
repeatedly

  * sorts the multiplicities non-increasingly at a fixed small tau > 0 and
    drops entries that are <= 0 there,
  * applies a standard Cremona move whenever the defect
    k(t) = degree - (three greatest multiplicities) is negative at tau, and
  * collapses four polynomially equal multiplicities into one doubled entry
    when no Cremona move applies.

Both moves preserve semi-effectivity, so if the terminal degree a + b*t is
forced negative on a t-range the original system is stably empty there.  The
returned threshold t0 encodes that range: the input's restriction-to-quadric
system is stably empty for all rational 0 <= t < t0.

Multiplicity lists are kept run-length encoded: systems routinely carry
hundreds of repeated entries (1^2p blocks), and every move touches at most a
handful of distinct values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linform import (
    LinForm,
    RationalLike,
    as_rational,
    format_linform,
    parse_linform,
)


class IterationLimitError(RuntimeError):
    """Raised when a reduction exceeds its step cap.

    The loop provably terminates, so hitting the cap signals an
    implementation bug rather than a hard input.
    """


class Move(str, enum.Enum):
    CREMONA = "cremona"
    MERGE = "merge"
    TERMINATE = "terminate"


Groups = tuple[tuple[LinForm, int], ...]


@dataclass(frozen=True)
class PlaneSystem:
    """Plane linear system with run-length encoded multiplicities.

    ``groups`` is a sequence of (form, count) pairs in presentation order;
    equality is componentwise, so two systems compare equal exactly when
    their normalized presentations coincide.
    """

    degree: LinForm
    groups: Groups

    @classmethod
    def of(cls, degree: LinForm, mults: Iterable[LinForm]) -> "PlaneSystem":
        """Build from an explicit multiplicity list, squeezing adjacent runs."""
        return cls(degree, _squeeze(_as_group_list(mults)))

    @property
    def mults(self) -> tuple[LinForm, ...]:
        """Expanded multiplicity list (use sparingly for large systems)."""
        out: list[LinForm] = []
        for lf, n in self.groups:
            out.extend([lf] * n)
        return tuple(out)

    @property
    def mult_count(self) -> int:
        return sum(n for _, n in self.groups)


def _as_group_list(mults: Iterable[LinForm | tuple[LinForm, int]]) -> list[tuple[LinForm, int]]:
    out: list[tuple[LinForm, int]] = []
    for m in mults:
        if isinstance(m, LinForm):
            out.append((m, 1))
        else:
            lf, n = m
            if n < 0:
                raise ValueError("negative multiplicity count")
            if n > 0:
                out.append((lf, n))
    return out


def _squeeze(groups: list[tuple[LinForm, int]]) -> Groups:
    """Merge adjacent equal-form runs without reordering."""
    out: list[tuple[LinForm, int]] = []
    for lf, n in groups:
        if out and out[-1][0] == lf:
            out[-1] = (lf, out[-1][1] + n)
        else:
            out.append((lf, n))
    return tuple(out)


@dataclass(frozen=True)
class ThresholdInput:
    """Input tuple (delta; q_1, ..., q_s; p): a rational degree, s positive
    rational multiplicities along specialized lines, and p extra very general
    lines of multiplicity one."""

    delta: Fraction
    qs: tuple[Fraction, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", as_rational(self.delta))
        object.__setattr__(self, "qs", tuple(as_rational(q) for q in self.qs))
        if self.delta <= 0:
            raise ValueError("delta must be positive")
        if any(q <= 0 for q in self.qs):
            raise ValueError("specialized multiplicities must be positive")
        if self.p < 0:
            raise ValueError("p must be nonnegative")


@dataclass(frozen=True)
class ReductionStep:
    """One recorded state: the normalized system, the defect k(t) computed
    for it (None with fewer than three multiplicities), and the move taken."""

    system: PlaneSystem
    k: LinForm | None
    move: Move


@dataclass(frozen=True)
class ThresholdResult:
    t0: Fraction
    steps: tuple[ReductionStep, ...]


def associate_system(inp: ThresholdInput) -> PlaneSystem:
    """The t-parametrized plane system attached to (delta; q_1..q_s; p).

    Restriction to a smooth quadric carrying the s specialized lines in one
    ruling, with the quadric subtracted t times, gives on the plane
    L2(2*delta - q + (s-4)t; delta - 2t, delta - q + (s-2)t, 1^(2p))
    where q is the sum of the q_j.
    """
    q = sum(inp.qs, Fraction(0))
    s = len(inp.qs)
    degree = LinForm(2 * inp.delta - q, Fraction(s - 4))
    m1 = LinForm(inp.delta, Fraction(-2))
    m2 = LinForm(inp.delta - q, Fraction(s - 2))
    groups = _as_group_list([m1, m2])
    if inp.p > 0:
        groups.append((LinForm.const(1), 2 * inp.p))
    return PlaneSystem(degree, _squeeze(groups))


def normalize(sys: PlaneSystem, tau: RationalLike) -> PlaneSystem:
    """Sort multiplicities non-increasingly at tau and drop entries <= 0 there.

    Tau-equal but polynomially distinct forms are ordered by (a, b) as a
    deterministic tiebreak; equal forms always end up in a single run.
    """
    tau = as_rational(tau)
    kept = [(lf, n) for lf, n in sys.groups if lf(tau) > 0]
    kept.sort(key=lambda g: (g[0](tau), g[0].a, g[0].b), reverse=True)
    return PlaneSystem(sys.degree, _squeeze(kept))


def cremona_k(sys: PlaneSystem) -> LinForm | None:
    """Degree minus the sum of the three greatest multiplicities, or None
    when fewer than three multiplicities remain."""
    if sys.mult_count < 3:
        return None
    k = sys.degree
    need = 3
    for lf, n in sys.groups:
        take = min(n, need)
        k = k - take * lf
        need -= take
        if need == 0:
            break
    return k


def apply_cremona(sys: PlaneSystem, k: LinForm) -> PlaneSystem:
    """Add k to the degree and to the three leading multiplicities.

    Positions are preserved and no re-sorting happens here, so applying k and
    then -k restores the system exactly; callers re-normalize afterwards.
    """
    if sys.mult_count < 3:
        raise ValueError("need at least three multiplicities for a Cremona move")
    new_groups: list[tuple[LinForm, int]] = []
    need = 3
    for lf, n in sys.groups:
        if need == 0:
            new_groups.append((lf, n))
            continue
        take = min(n, need)
        new_groups.append((lf + k, take))
        if n > take:
            new_groups.append((lf, n - take))
        need -= take
    return PlaneSystem(sys.degree + k, _squeeze(new_groups))


def merge_four(sys: PlaneSystem, tau: RationalLike) -> PlaneSystem | None:
    """Replace four equal multiplicities by one entry of twice the value.

    Expects a normalized system.  When several values occur four or more
    times the greatest at tau is merged; the result is re-normalized.
    Returns None when no value occurs four times.
    """
    for i, (lf, n) in enumerate(sys.groups):
        if n >= 4:
            rest = list(sys.groups)
            if n - 4 > 0:
                rest[i] = (lf, n - 4)
            else:
                del rest[i]
            rest.append((2 * lf, 1))
            return normalize(PlaneSystem(sys.degree, _squeeze(rest)), tau)
    return None


DEFAULT_MAX_STEPS = 1_000_000


def _scaled_groups(inp: ThresholdInput) -> tuple[int, int, int, list[list[int]]]:
    """Integer form of the associated system, scaled by the lcm D of all
    input denominators: returns (D, deg_a, deg_b, groups) with groups entries
    [a, b, count].  Scaling a system uniformly changes no comparison and no
    root, so the reduction may run entirely in integer arithmetic.
    """
    D = math.lcm(inp.delta.denominator, *(q.denominator for q in inp.qs)) if inp.qs else inp.delta.denominator
    delta = inp.delta * D
    q = sum((qi * D for qi in inp.qs), Fraction(0))
    s = len(inp.qs)
    assert delta.denominator == 1 and q.denominator == 1
    delta, q = int(delta), int(q)
    deg_a, deg_b = 2 * delta - q, D * (s - 4)
    groups = [[delta, -2 * D, 1], [delta - q, D * (s - 2), 1]]
    if inp.p > 0:
        groups.append([D, 0, 2 * inp.p])
    return D, deg_a, deg_b, groups


def _unscale(D: int, deg_a: int, deg_b: int, groups: list[list[int]]) -> PlaneSystem:
    degree = LinForm(Fraction(deg_a, D), Fraction(deg_b, D))
    return PlaneSystem(
        degree,
        tuple((LinForm(Fraction(a, D), Fraction(b, D)), n) for a, b, n in groups),
    )


def quadric_threshold(
    inp: ThresholdInput,
    tau: RationalLike,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    want_trace: bool = True,
) -> ThresholdResult:
    """Reduce the associated plane system and return the threshold t0.

    The loop alternates normalization, Cremona moves (while k(tau) < 0) and
    four-fold merges until neither applies.  With terminal degree a + b*t the
    threshold is

        0                      if a >= 0,
        min(q_j)               if a < 0 and b <= 0,
        min(-a/b, q_1..q_s)    otherwise,

    where an empty q-list drops the min(q_j) candidates (and the middle case
    returns 0).  ``want_trace=False`` skips step recording on hot paths.

    Internally the loop runs on the integer-scaled system (evaluation at
    tau = tn/td becomes the integer a*td + b*tn); recorded trace steps are
    scaled back, and the replay helpers re-derive them with the public
    Fraction operations, keeping the two routes independently checkable.
    """
    tau = as_rational(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    tn, td = tau.numerator, tau.denominator
    D, deg_a, deg_b, groups = _scaled_groups(inp)

    def norm(gs: list[list[int]]) -> list[list[int]]:
        kept = [(a * td + b * tn, a, b, n) for a, b, n in gs]
        kept = [g for g in kept if g[0] > 0]
        kept.sort(reverse=True)
        out: list[list[int]] = []
        for _, a, b, n in kept:
            if out and out[-1][0] == a and out[-1][1] == b:
                out[-1][2] += n
            else:
                out.append([a, b, n])
        return out

    groups = norm(groups)
    steps: list[ReductionStep] = []
    for _ in range(max_steps):
        total = sum(g[2] for g in groups)
        ka = kb = None
        if total >= 3:
            ka, kb, need = deg_a, deg_b, 3
            for a, b, n in groups:
                take = min(n, need)
                ka -= take * a
                kb -= take * b
                need -= take
                if need == 0:
                    break
        if ka is not None and ka * td + kb * tn < 0:
            if want_trace:
                steps.append(
                    ReductionStep(
                        _unscale(D, deg_a, deg_b, groups),
                        LinForm(Fraction(ka, D), Fraction(kb, D)),
                        Move.CREMONA,
                    )
                )
            deg_a += ka
            deg_b += kb
            new_groups: list[list[int]] = []
            need = 3
            for a, b, n in groups:
                take = min(n, need)
                if take:
                    new_groups.append([a + ka, b + kb, take])
                if n > take:
                    new_groups.append([a, b, n - take])
                need -= take
            groups = norm(new_groups)
            continue
        merged = False
        for i, (a, b, n) in enumerate(groups):
            if n >= 4:
                if want_trace:
                    steps.append(
                        ReductionStep(
                            _unscale(D, deg_a, deg_b, groups),
                            None
                            if ka is None
                            else LinForm(Fraction(ka, D), Fraction(kb, D)),
                            Move.MERGE,
                        )
                    )
                rest = [list(g) for g in groups]
                if n - 4 > 0:
                    rest[i][2] = n - 4
                else:
                    del rest[i]
                rest.append([2 * a, 2 * b, 1])
                groups = norm(rest)
                merged = True
                break
        if merged:
            continue
        if want_trace:
            steps.append(
                ReductionStep(
                    _unscale(D, deg_a, deg_b, groups),
                    None if ka is None else LinForm(Fraction(ka, D), Fraction(kb, D)),
                    Move.TERMINATE,
                )
            )
        break
    else:
        raise IterationLimitError(
            f"plane reduction exceeded {max_steps} steps for input {inp}"
        )
    if deg_a >= 0:
        t0 = Fraction(0)
    elif deg_b <= 0:
        t0 = min(inp.qs) if inp.qs else Fraction(0)
    else:
        t0 = min([Fraction(-deg_a, deg_b), *inp.qs])
    return ThresholdResult(t0, tuple(steps))


def replay_reduction(inp: ThresholdInput, steps: Sequence[ReductionStep], tau: RationalLike) -> None:
    """Re-derive every recorded system from its predecessor and declared move.

    Raises AssertionError on the first mismatch; also checks the conservation
    bookkeeping of Cremona moves (degree changes by k, exactly three
    multiplicity units change, each by k).
    """
    tau = as_rational(tau)
    if not steps:
        raise AssertionError("empty trace")
    current = normalize(associate_system(inp), tau)
    for i, step in enumerate(steps):
        if step.system != current:
            raise AssertionError(f"step {i}: recorded system diverges from replay")
        if step.k != cremona_k(current):
            raise AssertionError(f"step {i}: recorded k diverges from replay")
        if step.move is Move.CREMONA:
            assert step.k is not None and step.k(tau) < 0
            nxt = apply_cremona(current, step.k)
            if nxt.degree - current.degree != step.k:
                raise AssertionError(f"step {i}: degree change is not k")
            changed = current.mult_count - sum(
                min(n, dict_count(nxt.groups).get(lf, 0)) for lf, n in current.groups
            )
            if changed > 3:
                raise AssertionError(f"step {i}: more than three multiplicities changed")
            current = normalize(nxt, tau)
        elif step.move is Move.MERGE:
            merged = merge_four(current, tau)
            if merged is None:
                raise AssertionError(f"step {i}: merge recorded but impossible")
            current = merged
        else:
            if i != len(steps) - 1:
                raise AssertionError(f"step {i}: terminate before end of trace")


def dict_count(groups: Groups) -> dict[LinForm, int]:
    out: dict[LinForm, int] = {}
    for lf, n in groups:
        out[lf] = out.get(lf, 0) + n
    return out


def format_system(sys: PlaneSystem) -> str:
    """One-line rendering, e.g. "L2(9+t; 7-2t, 2+3t, 1^30)"."""
    parts = [
        format_linform(lf) if n == 1 else f"{format_linform(lf)}^{n}"
        for lf, n in sys.groups
    ]
    return f"L2({format_linform(sys.degree)}; {', '.join(parts)})"


def parse_system(text: str) -> PlaneSystem:
    """Inverse of :func:`format_system` (the "L2(" prefix is optional)."""
    s = text.strip()
    if s.startswith("L2(") and s.endswith(")"):
        s = s[3:-1]
    elif s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    head, _, tail = s.partition(";")
    degree = parse_linform(head)
    groups: list[tuple[LinForm, int]] = []
    tail = tail.strip()
    if tail:
        for chunk in tail.split(","):
            base, sep, exp = chunk.partition("^")
            n = int(exp) if sep else 1
            groups.append((parse_linform(base), n))
    return PlaneSystem(degree, _squeeze(groups))


def step_to_json(step: ReductionStep) -> dict:
    return {
        "degree": format_linform(step.system.degree),
        "mults": [[format_linform(lf), n] for lf, n in step.system.groups],
        "k": None if step.k is None else format_linform(step.k),
        "move": step.move.value,
    }

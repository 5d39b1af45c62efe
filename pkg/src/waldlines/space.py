"""Iterated quadric degeneration in P^3 and the certified bound search.

A space system (delta; q_1, ..., q_s | 1^p) records a rational degree delta,
multiplicities q_j along s lines specialized to one ruling of a fixed smooth
quadric Q, and p very general lines of multiplicity one.  The degeneration
loop either

  * stops with "yes" when the degree is forced below a prescribed
    multiplicity (delta < 1 with p >= 1, or delta < q_j, or delta <= 0) --
    a non-empty system cannot have degree below its vanishing order along a
    line, so the start system was stably empty;
  * subtracts the quadric: with threshold t0 from the plane reduction the new
    system is (delta - 2*t0; q_1 - t0, ..., q_s - t0 | 1^p), dropping
    multiplicities that reach zero; or
  * specializes one more very general line into the ruling.

Every move preserves semi-effectivity, so a "yes" on (delta; 1^s) certifies
delta as a lower bound for the Waldschmidt constant of s very general lines.

A subtraction is taken when t0 >= tau, and also when 0 < t0 < tau but t0
equals the least specialized multiplicity: such a step removes at least one
specialized line, so termination is preserved, and the worked traces this
code reproduces take exactly these sub-tau steps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cubic import AsymptoticCubic, largest_root
from .linform import RationalLike, as_rational, format_rational
from .plane import (
    DEFAULT_MAX_STEPS,
    IterationLimitError,
    ThresholdInput,
    quadric_threshold,
)


class LMove(str, enum.Enum):
    SUBTRACT = "subtract"
    SPECIALIZE = "specialize"
    TERMINATE_YES = "terminate-yes"
    TERMINATE_NO = "terminate-no"


@dataclass(frozen=True)
class SpaceSystem:
    delta: Fraction
    specialized: tuple[Fraction, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", as_rational(self.delta))
        object.__setattr__(
            self, "specialized", tuple(as_rational(q) for q in self.specialized)
        )
        if any(q <= 0 for q in self.specialized):
            raise ValueError("specialized multiplicities must stay positive")
        if self.p < 0:
            raise ValueError("p must be nonnegative")


@dataclass(frozen=True)
class DegenerationStep:
    """System state on arrival at the exit check, the plane-reduction
    threshold computed for it (None when the exit fired first), and the move
    taken from it."""

    system: SpaceSystem
    t0: Fraction | None
    move: LMove


@dataclass(frozen=True)
class DegenerationResult:
    answer: bool
    steps: tuple[DegenerationStep, ...]

    @property
    def final(self) -> SpaceSystem:
        return self.steps[-1].system


def restrict_to_quadric(
    delta: RationalLike, specialized: tuple[Fraction, ...] | list[Fraction], p: int
) -> ThresholdInput:
    """Package a space system for the plane reduction.

    The associated plane system of the result is the t-parametrized trace of
    the space system on the quadric: at t = 0 it is
    (2d - mu; d, d - mu, 1^(2p)) with mu the sum of the specialized
    multiplicities.
    """
    return ThresholdInput(as_rational(delta), tuple(specialized), p)


def _exit_yes(sys: SpaceSystem) -> bool:
    if sys.delta <= 0:
        return True
    if sys.delta < 1 and sys.p >= 1:
        return True
    return any(sys.delta < q for q in sys.specialized)


def certify_lower_bound(
    delta: RationalLike,
    s: int,
    tau: RationalLike,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> DegenerationResult:
    """Run the degeneration loop on (delta; 1^s).

    A True answer certifies that the Waldschmidt constant of s very general
    lines in P^3 is at least delta.  A False answer certifies nothing.
    """
    delta = as_rational(delta)
    tau = as_rational(tau)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if tau <= 0:
        raise ValueError("tau must be positive")
    if s < 1:
        raise ValueError("s must be positive")
    sys = SpaceSystem(delta, (), s)
    steps: list[DegenerationStep] = []
    for _ in range(max_steps):
        if _exit_yes(sys):
            steps.append(DegenerationStep(sys, None, LMove.TERMINATE_YES))
            return DegenerationResult(True, tuple(steps))
        t0 = quadric_threshold(
            restrict_to_quadric(sys.delta, sys.specialized, sys.p),
            tau,
            max_steps=max_steps,
            want_trace=False,
        ).t0
        min_q = min(sys.specialized) if sys.specialized else None
        if t0 >= tau or (t0 > 0 and t0 == min_q):
            steps.append(DegenerationStep(sys, t0, LMove.SUBTRACT))
            sys = SpaceSystem(
                sys.delta - 2 * t0,
                tuple(q - t0 for q in sys.specialized if q - t0 > 0),
                sys.p,
            )
            continue
        if sys.p > 0:
            steps.append(DegenerationStep(sys, t0, LMove.SPECIALIZE))
            sys = SpaceSystem(
                sys.delta, sys.specialized + (Fraction(1),), sys.p - 1
            )
            continue
        steps.append(DegenerationStep(sys, t0, LMove.TERMINATE_NO))
        return DegenerationResult(False, tuple(steps))
    raise IterationLimitError(
        f"degeneration exceeded {max_steps} iterations for delta={delta}, s={s}"
    )


def replay_degeneration(result: DegenerationResult, tau: RationalLike) -> None:
    """Re-derive each recorded system from its predecessor and declared move;
    raises AssertionError on any mismatch."""
    tau = as_rational(tau)
    steps = result.steps
    for i, step in enumerate(steps[:-1]):
        nxt = steps[i + 1].system
        if step.move is LMove.SUBTRACT:
            assert step.t0 is not None and step.t0 > 0
            expect = SpaceSystem(
                step.system.delta - 2 * step.t0,
                tuple(q - step.t0 for q in step.system.specialized if q - step.t0 > 0),
                step.system.p,
            )
        elif step.move is LMove.SPECIALIZE:
            expect = SpaceSystem(
                step.system.delta,
                step.system.specialized + (Fraction(1),),
                step.system.p - 1,
            )
        else:
            raise AssertionError(f"step {i}: terminal move before end of trace")
        if expect != nxt:
            raise AssertionError(f"step {i}: recorded successor diverges from replay")
    last = steps[-1]
    if result.answer:
        if last.move is not LMove.TERMINATE_YES or not _exit_yes(last.system):
            raise AssertionError("yes answer without satisfied exit condition")
    else:
        if last.move is not LMove.TERMINATE_NO or _exit_yes(last.system):
            raise AssertionError("no answer with satisfied exit condition")


def best_bound(
    s: int,
    tau: RationalLike,
    grid: RationalLike,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Fraction:
    """Largest grid multiple delta > 1 certified by the degeneration loop.

    Scans delta downward from the conjectural upper bound (the largest root
    of t^3 - 3st + 2s, rounded up to the grid) in steps of ``grid`` and
    returns the first certified value, or 0 when no grid point above 1 is
    certified.  Each returned value is individually certified, so soundness
    does not depend on the certified region being an interval.
    """
    tau = as_rational(tau)
    grid = as_rational(grid)
    if grid <= 0:
        raise ValueError("grid must be positive")
    root = largest_root(AsymptoticCubic(s), min(grid, Fraction(1, 1000)))
    assert root is not None  # k = 0 cubics always have a root >= 1
    delta = -(-root.hi // grid) * grid  # ceil to the grid
    while delta > 1:
        if certify_lower_bound(delta, s, tau, max_steps=max_steps).answer:
            return delta
        delta -= grid
    return Fraction(0)


def format_space_system(sys: SpaceSystem) -> str:
    """One-line rendering, e.g. "(10096/5045; 3/5045,3/5045,3/5045 | 1^5)"."""
    spec = ",".join(format_rational(q) for q in sys.specialized)
    if spec:
        spec += " "
    if sys.p == 0:
        gen = ""
    elif sys.p == 1:
        gen = "1"
    else:
        gen = f"1^{sys.p}"
    return f"({format_rational(sys.delta)}; {spec}| {gen})"


def step_to_json(step: DegenerationStep) -> dict:
    return {
        "delta": format_rational(step.system.delta),
        "specialized": [format_rational(q) for q in step.system.specialized],
        "p": step.system.p,
        "t0": None if step.t0 is None else format_rational(step.t0),
        "move": step.move.value,
    }

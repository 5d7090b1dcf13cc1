"""Step rules, validated step sets, and tuning spaces.

A tuning space partitions every octave of its standard pitch the same
way.  Partition point (k, i) has frequency ``2**k * standard_pitch * c_i``
where ``c_i`` is the factor accumulated by the first i steps, so the base
octave determines the whole space.  Steps come in two closed forms:

* :class:`Ratio`: multiply the current pitch by a fixed exact factor.
* :class:`RootOffset`: add a rational multiple of the current octave root.

Both forms commute with octave doubling, which is what makes the
"same partition in every octave" picture consistent.  Construction
eagerly validates that the composed steps double the octave root exactly
(:class:`~tuningspaces.errors.ClosureViolation` otherwise) and that every
step strictly raises the pitch
(:class:`~tuningspaces.errors.MonotonicityViolation` otherwise).
"""

from __future__ import annotations

import operator
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import ClosureViolation, ExactnessError, MonotonicityViolation
from .exact import Exact, as_exact
from .pitch import PitchLike, as_pitch


class PitchCoordinate(NamedTuple):
    """Location of a partition point: octave index k, step index i."""

    k: int
    i: int


CoordinateLike = Union[PitchCoordinate, "tuple[int, int]"]


@dataclass(frozen=True)
class Ratio:
    """Step rule that multiplies the pitch by an exact positive factor.

    The factor may be rational (``Ratio("5/4")``) or a power of two
    (``Ratio(Exact.pow2(Fraction(1, 12)))`` for an equal-temperament step).
    """

    factor: Exact

    def __post_init__(self):
        object.__setattr__(self, "factor", as_exact(self.factor))

    def apply(self, relative: Exact) -> Exact:
        return relative * self.factor

    def __str__(self) -> str:
        return f"ratio {self.factor}"


@dataclass(frozen=True)
class RootOffset:
    """Step rule that adds ``amount`` times the current octave's root."""

    amount: Fraction

    def __post_init__(self):
        object.__setattr__(self, "amount", Fraction(self.amount))

    def apply(self, relative: Exact) -> Exact:
        # `relative` is the pitch divided by the octave root, so adding
        # amount * root means adding the bare amount here.  The sum only
        # exists in the exact domain while the accumulated factor is
        # rational.
        if relative.e != 0:
            raise ExactnessError(
                f"cannot apply {self} after steps that left the accumulated "
                f"factor irrational ({relative})"
            )
        return Exact(relative.m + self.amount)

    def __str__(self) -> str:
        return f"rootoffset {self.amount}"


Step = Union[Ratio, RootOffset]


@dataclass(frozen=True)
class StepSet:
    """Ordered step rules for one octave, validated at construction."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        if not steps:
            raise ValueError("a step set needs at least one step")
        for step in steps:
            if not isinstance(step, (Ratio, RootOffset)):
                raise TypeError(f"not a step rule: {step!r}")
        object.__setattr__(self, "steps", steps)

        factors = [Exact(1)]
        for idx, step in enumerate(steps):
            cur = factors[-1]
            try:
                nxt = step.apply(cur)
            except ExactnessError:
                raise
            except ValueError as exc:
                raise MonotonicityViolation(
                    f"step {idx} ({step}) drives the pitch non-positive"
                ) from exc
            if nxt <= cur:
                raise MonotonicityViolation(
                    f"step {idx} ({step}) does not raise the pitch: {cur} -> {nxt}"
                )
            factors.append(nxt)
        if factors[-1] != 2:
            raise ClosureViolation(
                f"steps compose to {factors[-1]} times the octave root, "
                f"expected exactly 2"
            )
        object.__setattr__(self, "_factors", tuple(factors))

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def uniform(self) -> bool:
        """True when every step is the same rule."""
        first = self.steps[0]
        return all(step == first for step in self.steps[1:])

    @property
    def partition_factors(self) -> tuple[Exact, ...]:
        """Factors c_0 .. c_n; point i sits at c_i times the octave root."""
        return self._factors  # type: ignore[attr-defined]


@dataclass(frozen=True)
class TuningSpace:
    """A standard pitch together with a validated step set.

    Immutable and hashable; all derived pitches are exact values.
    """

    standard_pitch: Exact
    step_set: StepSet

    def __post_init__(self):
        object.__setattr__(self, "standard_pitch", as_pitch(self.standard_pitch))
        if not isinstance(self.step_set, StepSet):
            object.__setattr__(self, "step_set", StepSet(tuple(self.step_set)))

    @property
    def n(self) -> int:
        return self.step_set.n

    @property
    def chromatic(self) -> bool:
        """True when the step set is uniform."""
        return self.step_set.uniform

    def canonical(self, coord: CoordinateLike) -> PitchCoordinate:
        """Validate a coordinate and fold the shared endpoint upward.

        Step index n names the same partition point as index 0 of the next
        octave, so (k, n) canonicalizes to (k+1, 0).
        """
        k, i = coord
        k = operator.index(k)
        i = operator.index(i)
        n = self.n
        if not 0 <= i <= n:
            raise ValueError(f"step index {i} out of range 0..{n}")
        if i == n:
            return PitchCoordinate(k + 1, 0)
        return PitchCoordinate(k, i)

    def coord(self, k: int, i: int) -> PitchCoordinate:
        return self.canonical((k, i))

    def octave_root(self, k: int) -> Exact:
        """The pitch at (k, 0), i.e. ``2**k`` times the standard pitch."""
        return self.standard_pitch.times_pow2(operator.index(k))

    def pitch_at(self, coord: CoordinateLike) -> Exact:
        """Exact frequency of a partition point."""
        k, i = self.canonical(coord)
        return self.octave_root(k) * self.step_set.partition_factors[i]

    def partition(self, k: int) -> tuple[Exact, ...]:
        """All n+1 partition points of octave k, ascending."""
        root = self.octave_root(k)
        return tuple(root * c for c in self.step_set.partition_factors)

    def step_between(self, a: CoordinateLike, b: CoordinateLike) -> int:
        """Signed step count from a to b: positive when b lies above a."""
        ca = self.canonical(a)
        cb = self.canonical(b)
        n = self.n
        return (cb.k * n + cb.i) - (ca.k * n + ca.i)

    def __str__(self) -> str:
        return describe(self)


def make_ntet(standard_pitch: PitchLike, n: int) -> TuningSpace:
    """n-tone equal temperament: every step multiplies by the n-th root of 2.

    The pitch at (k, j) is ``standard_pitch * 2**(k + j/n)``, held
    symbolically, so the n-fold step product is exactly 2 and the space
    passes octave closure by construction.
    """
    n = _positive_count(n)
    step = Ratio(Exact.pow2(Fraction(1, n)))
    return TuningSpace(as_pitch(standard_pitch), StepSet((step,) * n))


def make_nedo(standard_pitch: PitchLike, n: int) -> TuningSpace:
    """n equal divisions of the octave by frequency.

    Every step adds 1/n of the octave root, an arithmetic rather than
    logarithmic division: the pitch at (k, j) is
    ``2**k * standard_pitch * (1 + j/n)``, exactly.
    """
    n = _positive_count(n)
    step = RootOffset(Fraction(1, n))
    return TuningSpace(as_pitch(standard_pitch), StepSet((step,) * n))


def make_custom(standard_pitch: PitchLike, steps: Sequence[Step]) -> TuningSpace:
    """Build a space from explicit step rules.

    Raises ClosureViolation when the rules do not compose to an exact
    doubling, and MonotonicityViolation when some step fails to raise the
    pitch.
    """
    return TuningSpace(as_pitch(standard_pitch), StepSet(tuple(steps)))


def describe(space: TuningSpace) -> str:
    """A short human label: '12-TET tuned to 440 Hz' and friends."""
    label = format_hz_label(space.standard_pitch)
    n = space.n
    if space.chromatic:
        step = space.step_set.steps[0]
        if isinstance(step, Ratio) and step.factor == Exact.pow2(Fraction(1, n)):
            return f"{n}-TET tuned to {label} Hz"
        if isinstance(step, RootOffset) and step.amount == Fraction(1, n):
            return f"{n}-EDO tuned to {label} Hz"
    return f"custom {n}-step tuning at {label} Hz"


def format_hz_label(value: Exact) -> str:
    if value.is_rational:
        frac = value.as_fraction()
        if frac.denominator == 1:
            return str(frac.numerator)
        return repr(float(frac))
    return str(value)


def _positive_count(n: int) -> int:
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"need at least one step per octave, got n={n}")
    return n

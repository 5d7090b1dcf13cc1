"""Pitches as positive frequencies, octave intervals, and octave location."""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .exact import Exact, ExactLike, as_exact

PitchLike = ExactLike


def as_pitch(value: PitchLike) -> Exact:
    """Coerce a frequency in Hz to its exact form, rejecting non-positives."""
    return as_exact(value)


@dataclass(frozen=True)
class OctaveInterval:
    """The closed frequency interval ``[2**k * root, 2**(k+1) * root]``.

    Adjacent octaves share an endpoint: the top of octave k is the bottom
    of octave k+1.  Membership here uses the closed interval; use
    :func:`locate_octave` when a boundary pitch must resolve to a single k.
    """

    root: Exact
    k: int

    @property
    def lo(self) -> Exact:
        return self.root.times_pow2(self.k)

    @property
    def hi(self) -> Exact:
        return self.root.times_pow2(self.k + 1)

    def __contains__(self, pitch: PitchLike) -> bool:
        p = as_pitch(pitch)
        return self.lo <= p <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def octave_of(root: PitchLike, k: int) -> OctaveInterval:
    """The k-th octave of a root pitch; k=0 is the base octave [root, 2*root]."""
    return OctaveInterval(as_pitch(root), operator.index(k))


def locate_octave(root: PitchLike, probe: PitchLike) -> int:
    """Return the unique k with ``2**k * root <= probe < 2**(k+1) * root``.

    Octaves tile the positive reals, so every probe lands somewhere.  A
    boundary pitch belongs to two closed octaves at once; location resolves
    the tie upward, reporting it as the root of the higher octave.

    The answer is computed exactly: a bit-length estimate of log2 seeds k,
    then exact multiply-and-compare steps settle boundary cases that would
    fool floating-point logarithms.
    """
    r = as_pitch(root)
    p = as_pitch(probe)
    ratio = p / r
    # log2(ratio) differs from the mantissa bit-length gap by less than 2,
    # so the correction loops below run at most a couple of times.
    k = ratio.m.numerator.bit_length() - ratio.m.denominator.bit_length()
    while ratio < Exact(1, k):
        k -= 1
    while ratio >= Exact(1, k + 1):
        k += 1
    return k

"""Octave equivalence, notes as class indices, and the named landmarks.

Two partition points are octave equivalent exactly when they carry the
same step index, whatever their octaves.  A note is one such equivalence
class; it is represented by its canonical index in 0..n-1 rather than by
any stored member list, since the class itself is infinite.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache

from .exact import Exact
from .tuning import CoordinateLike, PitchCoordinate, TuningSpace, make_ntet


@dataclass(frozen=True)
class Note:
    """An octave-equivalence class of a tuning space."""

    space: TuningSpace
    class_index: int

    def __post_init__(self):
        n = self.space.n
        i = operator.index(self.class_index)
        if i == n:
            i = 0  # the top-of-octave index names the same class as the root
        if not 0 <= i < n:
            raise ValueError(f"class index {i} out of range 0..{n - 1}")
        object.__setattr__(self, "class_index", i)

    def pitch(self, k: int = 0) -> Exact:
        """Frequency of this class's member in octave k."""
        return self.space.pitch_at((k, self.class_index))

    def __repr__(self) -> str:
        return f"Note({self.class_index} of {self.space})"


@dataclass(frozen=True)
class NoteSet:
    """The n octave-equivalence classes of a space, indexed 0..n-1."""

    space: TuningSpace
    notes: tuple[Note, ...]

    def __len__(self) -> int:
        return len(self.notes)

    def __iter__(self):
        return iter(self.notes)

    def __getitem__(self, index: int) -> Note:
        return self.notes[index]


def note_set(space: TuningSpace) -> NoteSet:
    return NoteSet(space, tuple(Note(space, i) for i in range(space.n)))


def octave_equivalent(space: TuningSpace, a: CoordinateLike, b: CoordinateLike) -> bool:
    """True when the two coordinates carry equal canonical step indices."""
    return space.canonical(a).i == space.canonical(b).i


def octave_equivalent_by_frequency(
    space: TuningSpace, a: CoordinateLike, b: CoordinateLike
) -> bool:
    """Frequency-level equivalence test.

    With the lower pitch first, the two coordinates are equivalent exactly
    when the higher frequency equals the lower one scaled by 2 to the
    octave difference.  Agrees with :func:`octave_equivalent` on every
    input; the comparison is exact, never float-rounded.
    """
    ca = space.canonical(a)
    cb = space.canonical(b)
    fa = space.pitch_at(ca)
    fb = space.pitch_at(cb)
    if fa > fb:
        ca, cb = cb, ca
        fa, fb = fb, fa
    return fb == fa.times_pow2(cb.k - ca.k)


def note_of(space: TuningSpace, coord: CoordinateLike) -> Note:
    """The equivalence class containing the given partition point."""
    return Note(space, space.canonical(coord).i)


def members_of(note: Note, k_lo: int, k_hi: int) -> list[PitchCoordinate]:
    """Class members with octave index in [k_lo, k_hi], ascending.

    A finite window of the infinite class; empty when k_lo > k_hi.
    """
    k_lo = operator.index(k_lo)
    k_hi = operator.index(k_hi)
    return [PitchCoordinate(k, note.class_index) for k in range(k_lo, k_hi + 1)]


@lru_cache(maxsize=1)
def _reference_space() -> TuningSpace:
    return make_ntet(440, 12)


def concert_a() -> tuple[TuningSpace, PitchCoordinate]:
    """12-TET at 440 Hz and the coordinate of concert A, the standard pitch."""
    return _reference_space(), PitchCoordinate(0, 0)


def middle_c() -> tuple[TuningSpace, PitchCoordinate]:
    """Same space as :func:`concert_a`; middle C sits at (-1, 3).

    These landmarks are fixed to 12-TET at 440 Hz by definition and are
    deliberately not configurable.
    """
    return _reference_space(), PitchCoordinate(-1, 3)

"""Note names for 12-class spaces: parsing, rendering, enharmonic tables.

Two integer conventions exist for the same twelve rows of spellings.
The A-rooted convention indexes classes from the tuning note A, matching
the step indices of a 12-TET space tuned to A (A = 0, C = 3).  The
C-rooted convention is the integer notation rooted at C (C = 0, A = 9).
They differ by a constant rotation: C-rooted = (A-rooted - 3) mod 12.

Naming applies to 12-class spaces only; other sizes have no standard
spelling table and their notes are addressed by class index.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum

from .errors import ParseError


class NamingConvention(Enum):
    A_ROOTED = "a"
    C_ROOTED = "c"


A_ROOTED = NamingConvention.A_ROOTED
C_ROOTED = NamingConvention.C_ROOTED

_ACCIDENTAL_ASCII = {-2: "bb", -1: "b", 0: "", 1: "#", 2: "##"}
_ACCIDENTAL_UNICODE = {-2: "♭♭", -1: "♭", 0: "", 1: "♯", 2: "\U0001d12a"}

# Accepted accidental spellings.  Case matters: "b" after a letter is a
# flat while "B" is only ever a letter, and "x" is the ASCII double sharp.
_ACCIDENTAL_SPELLINGS = {
    "": 0,
    "#": 1,
    "♯": 1,
    "##": 2,
    "x": 2,
    "♯♯": 2,
    "\U0001d12a": 2,
    "b": -1,
    "♭": -1,
    "bb": -2,
    "♭♭": -2,
    "\U0001d12b": -2,
}

# Semitone positions of the natural letters under each convention.
_LETTER_CLASS = {
    NamingConvention.A_ROOTED: {"A": 0, "B": 2, "C": 3, "D": 5, "E": 7, "F": 8, "G": 10},
    NamingConvention.C_ROOTED: {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11},
}


@dataclass(frozen=True)
class NoteName:
    """A letter A..G with an accidental from double flat (-2) to double sharp (+2)."""

    letter: str
    accidental: int

    def __post_init__(self):
        if self.letter not in "ABCDEFG" or len(self.letter) != 1:
            raise ValueError(f"letter must be one of A..G, got {self.letter!r}")
        if self.accidental not in (-2, -1, 0, 1, 2):
            raise ValueError(f"accidental must be in -2..2, got {self.accidental!r}")

    @property
    def ascii(self) -> str:
        return self.letter + _ACCIDENTAL_ASCII[self.accidental]

    def __str__(self) -> str:
        return self.letter + _ACCIDENTAL_UNICODE[self.accidental]


def _name(letter: str, accidental: int) -> NoteName:
    return NoteName(letter, accidental)


# The twelve enharmonic rows in C-rooted order, exactly as tabulated for
# the chromatic notes of 12-TET.  Rows have 2 or 3 spellings; 31 distinct
# letter-accidental combinations appear in total.
_ROWS_C_ROOTED: tuple[tuple[NoteName, ...], ...] = (
    (_name("B", 1), _name("C", 0), _name("D", -2)),
    (_name("C", 1), _name("D", -1)),
    (_name("C", 2), _name("D", 0), _name("E", -2)),
    (_name("D", 1), _name("E", -1)),
    (_name("D", 2), _name("E", 0), _name("F", -1)),
    (_name("E", 1), _name("F", 0), _name("G", -2)),
    (_name("F", 1), _name("G", -1)),
    (_name("F", 2), _name("G", 0), _name("A", -2)),
    (_name("G", 1), _name("A", -1)),
    (_name("G", 2), _name("A", 0), _name("B", -2)),
    (_name("A", 1), _name("B", -1)),
    (_name("A", 2), _name("B", 0), _name("C", -1)),
)

_ROWS = {
    NamingConvention.C_ROOTED: _ROWS_C_ROOTED,
    # A-rooted class c holds the same spellings as C-rooted row (c - 3) mod 12.
    NamingConvention.A_ROOTED: tuple(_ROWS_C_ROOTED[(c - 3) % 12] for c in range(12)),
}


def parse_note_name(text: str, convention: NamingConvention = C_ROOTED) -> int:
    """Parse a letter-plus-accidental name to its class integer in 0..11.

    Grammar: one letter A..G (either case), then at most one accidental
    spelling from ``# ## x b bb`` or the unicode equivalents.  Letters are
    case-insensitive; accidentals are case-sensitive.  The class is the
    letter's semitone position shifted by the accidental, so every
    letter-accidental combination parses, including the four the table
    never lists (E##, B##, Cbb, Fbb).
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    if not text:
        raise ParseError("expected a note letter A..G", 0)
    base = _LETTER_CLASS[convention].get(text[0].upper())
    if base is None:
        raise ParseError(f"expected a note letter A..G, found {text[0]!r}", 0)
    accidental = _ACCIDENTAL_SPELLINGS.get(text[1:])
    if accidental is None:
        raise ParseError(f"unknown accidental {text[1:]!r}", 1)
    return (base + accidental) % 12


def render_note_name(class_index: int, convention: NamingConvention = C_ROOTED) -> str:
    """Canonical ASCII spelling of a class: its natural name when the row
    has one, otherwise the single-sharp name."""
    row = enharmonic_spellings(class_index, convention)
    for name in row:
        if name.accidental == 0:
            return name.ascii
    for name in row:
        if name.accidental == 1:
            return name.ascii
    raise AssertionError(f"row {class_index} has neither a natural nor a sharp")


def enharmonic_spellings(
    class_index: int, convention: NamingConvention = C_ROOTED
) -> tuple[NoteName, ...]:
    """The full table row for a class: 2 or 3 spellings, in table order."""
    i = operator.index(class_index)
    if not 0 <= i <= 11:
        raise ValueError(f"class index {i} out of range 0..11")
    return _ROWS[convention][i]

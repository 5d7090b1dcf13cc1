"""Tuning definition documents, frequency tables, and scale file export.

Definition documents are UTF-8 ``key: value`` entries.  Entries are
separated by newlines or commas (so a one-line document works), and the
keys are:

    name            optional label
    kind            tet | edo | custom
    n               steps per octave, positive integer
    standard_pitch  decimal or p/q rational, in Hz
    steps           custom kind only: semicolon-separated rules, each
                    ``ratio p/q`` or ``rootoffset p/q``

Scale export follows the Scala ``.scl`` text layout: a description line,
a count line, then one pitch per line relative to the scale root.  A
rational interval is written as an explicit ``p/q`` ratio; an irrational
one becomes a cents value (cents lines are the ones containing ``.``).
Import is deliberately limited to the shape this module writes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import operator
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple

from .errors import DefinitionError
from .exact import Exact
from .notation import A_ROOTED, render_note_name
from .pitch import PitchLike
from .tuning import (
    Ratio,
    RootOffset,
    Step,
    TuningSpace,
    describe,
    make_custom,
    make_nedo,
    make_ntet,
)

_KEYS = ("name", "kind", "n", "standard_pitch", "steps")
_KINDS = ("tet", "edo", "custom")


@dataclass(frozen=True)
class TuningDefinition:
    """Parsed form of a definition document, not yet validated as a space."""

    kind: str
    n: int
    standard_pitch: Fraction
    steps: tuple[Step, ...] | None = None
    name: str = ""

    def build(self) -> TuningSpace:
        """Construct the space, running full closure and monotonicity checks."""
        if self.kind == "tet":
            return make_ntet(self.standard_pitch, self.n)
        if self.kind == "edo":
            return make_nedo(self.standard_pitch, self.n)
        assert self.steps is not None
        return make_custom(self.standard_pitch, self.steps)


def parse_definition(text: str) -> TuningDefinition:
    """Parse a definition document; raises DefinitionError with line numbers."""
    entries: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for part in line.split(","):
            part = part.strip()
            if not part:
                continue
            if ":" not in part:
                raise DefinitionError(f"expected 'key: value', got {part!r}", lineno)
            key, value = part.split(":", 1)
            key = key.strip().lower()
            if key not in _KEYS:
                raise DefinitionError(f"unknown key {key!r}", lineno)
            if key in entries:
                raise DefinitionError(f"duplicate key {key!r}", lineno)
            entries[key] = (value.strip(), lineno)

    def need(key: str) -> tuple[str, int]:
        if key not in entries:
            raise DefinitionError(f"missing required key {key!r}")
        return entries[key]

    kind, kind_line = need("kind")
    kind = kind.lower()
    if kind not in _KINDS:
        raise DefinitionError(f"kind must be tet, edo or custom, got {kind!r}", kind_line)

    n_text, n_line = need("n")
    try:
        n = int(n_text)
    except ValueError:
        raise DefinitionError(f"n must be an integer, got {n_text!r}", n_line) from None
    if n < 1:
        raise DefinitionError("n must be positive", n_line)

    sp_text, sp_line = need("standard_pitch")
    try:
        standard_pitch = Fraction(sp_text)
    except (ValueError, ZeroDivisionError):
        raise DefinitionError(
            f"standard_pitch must be a decimal or p/q rational, got {sp_text!r}", sp_line
        ) from None
    if standard_pitch <= 0:
        raise DefinitionError("standard_pitch must be positive", sp_line)

    name = entries.get("name", ("", 0))[0]

    if kind == "custom":
        if "steps" not in entries:
            raise DefinitionError("kind: custom requires a steps entry")
        steps_text, steps_line = entries["steps"]
        steps = tuple(_parse_step(rule, steps_line) for rule in steps_text.split(";"))
        if len(steps) != n:
            raise DefinitionError(f"n is {n} but {len(steps)} steps are given", steps_line)
    else:
        if "steps" in entries:
            raise DefinitionError(f"kind: {kind} takes no steps entry", entries["steps"][1])
        steps = None

    return TuningDefinition(
        kind=kind, n=n, standard_pitch=standard_pitch, steps=steps, name=name
    )


def _parse_step(rule: str, lineno: int) -> Step:
    parts = rule.strip().split()
    if len(parts) != 2:
        raise DefinitionError(
            f"step must be 'ratio p/q' or 'rootoffset p/q', got {rule.strip()!r}", lineno
        )
    word, value_text = parts[0].lower(), parts[1]
    try:
        value = Fraction(value_text)
    except (ValueError, ZeroDivisionError):
        raise DefinitionError(f"bad step value {value_text!r}", lineno) from None
    if word == "ratio":
        if value <= 0:
            raise DefinitionError(f"ratio must be positive, got {value_text!r}", lineno)
        return Ratio(Exact(value))
    if word == "rootoffset":
        return RootOffset(value)
    raise DefinitionError(f"unknown step rule {word!r}", lineno)


def load_tuning(source: str | os.PathLike) -> TuningSpace:
    """Build a validated tuning space from a definition document or file path.

    A string containing ``:`` or a newline is treated as the document
    itself; anything else is read as a file path.
    """
    return parse_definition(_read_source(source)).build()


def _read_source(source: str | os.PathLike) -> str:
    if isinstance(source, os.PathLike):
        return Path(source).read_text(encoding="utf-8")
    if isinstance(source, str):
        if ":" in source or "\n" in source:
            return source
        path = Path(source)
        if path.suffix == ".scl":
            raise DefinitionError(
                "scale files carry no standard pitch; use import_scl() with one"
            )
        return path.read_text(encoding="utf-8")
    raise TypeError(f"expected definition text or a path, got {type(source).__name__}")


# frequency tables ---------------------------------------------------------

CSV_HEADER = ("k", "i", "exact", "hz", "name")


class TableRow(NamedTuple):
    k: int
    i: int
    value: Exact
    name: str


@dataclass(frozen=True)
class FrequencyTable:
    """All partition points of a space over a closed octave range.

    Every octave contributes its n+1 points including both endpoints, so
    consecutive octaves repeat the shared boundary pitch: the identification
    of one octave's top with the next octave's root stays visible.  Rows
    ascend in frequency, with equality exactly at those boundaries.
    """

    space: TuningSpace
    k_lo: int
    k_hi: int
    rows: tuple[TableRow, ...]

    def to_csv(self, precision: int = 3) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(CSV_HEADER)
        for row in self.rows:
            writer.writerow(
                [row.k, row.i, str(row.value), _format_hz(row.value, precision), row.name]
            )
        return buf.getvalue()

    def to_json(self, precision: int = 3) -> str:
        payload = [
            {
                "k": row.k,
                "i": row.i,
                "exact": str(row.value),
                "hz": round(float(row.value), precision),
                "name": row.name,
            }
            for row in self.rows
        ]
        return json.dumps(payload, indent=2) + "\n"

    def to_pretty(self, precision: int = 3) -> str:
        n = self.space.n
        named = n == 12
        header = ["k", "i", "exact", "hz"] + (["name"] if named else [])
        body: list[tuple[list[str], str]] = []
        for row in self.rows:
            cells = [str(row.k), str(row.i), str(row.value), _format_hz(row.value, precision)]
            if named:
                cells.append(row.name)
            body.append((cells, " *" if row.i == n else ""))
        widths = [
            max(len(title), max(len(cells[col]) for cells, _ in body))
            for col, title in enumerate(header)
        ]
        lines = ["  ".join(title.ljust(widths[col]) for col, title in enumerate(header))]
        for cells, marker in body:
            line = "  ".join(cell.ljust(widths[col]) for col, cell in enumerate(cells))
            lines.append(line.rstrip() + marker)
        if any(marker for _, marker in body):
            lines.append("* octave endpoint, same pitch as the next octave's root")
        return "\n".join(lines) + "\n"


def build_table(space: TuningSpace, k_lo: int, k_hi: int) -> FrequencyTable:
    """Rows for every coordinate (k, i) with k_lo <= k <= k_hi and 0 <= i <= n."""
    k_lo = operator.index(k_lo)
    k_hi = operator.index(k_hi)
    if k_lo > k_hi:
        raise ValueError(f"empty octave range {k_lo}..{k_hi}")
    n = space.n
    named = n == 12
    rows = []
    for k in range(k_lo, k_hi + 1):
        for i in range(n + 1):
            value = space.pitch_at((k, i))
            name = render_note_name(i % n, A_ROOTED) if named else ""
            rows.append(TableRow(k, i, value, name))
    return FrequencyTable(space, k_lo, k_hi, tuple(rows))


def emit_table(
    space: TuningSpace, k_lo: int, k_hi: int, fmt: str = "pretty", precision: int = 3
) -> str:
    """Render the frequency table in one of csv, json or pretty."""
    table = build_table(space, k_lo, k_hi)
    if fmt == "csv":
        return table.to_csv(precision)
    if fmt == "json":
        return table.to_json(precision)
    if fmt == "pretty":
        return table.to_pretty(precision)
    raise ValueError(f"unknown table format {fmt!r}")


def _format_hz(value: Exact, precision: int) -> str:
    return f"{float(value):.{precision}f}"


# scale files ---------------------------------------------------------------


def export_scl(space: TuningSpace, description: str | None = None) -> str:
    """Render the space as a Scala-style scale file.

    One line per step endpoint i = 1..n, relative to the octave root:
    an exact ``p/q`` ratio when the interval is rational, otherwise cents
    to six decimals.  The last line always represents the full octave
    exactly (``2/1``, or ``1200.000000`` in the cents case).
    """
    lines = [description or describe(space), str(space.n)]
    for rel in space.step_set.partition_factors[1:]:
        lines.append(_pitch_line(rel))
    return "\n".join(lines) + "\n"


def _pitch_line(rel: Exact) -> str:
    if rel.is_rational:
        frac = rel.as_fraction()
        return f"{frac.numerator}/{frac.denominator}"
    return f"{_cents(rel):.6f}"


def _cents(rel: Exact) -> float:
    if rel.m == 1:
        # pure power of two: 1200 * e is an exact rational number of cents
        return float(1200 * rel.e)
    return float(1200 * rel.e) + 1200 * math.log2(float(rel.m))


def import_scl(text: str, standard_pitch: PitchLike) -> TuningSpace:
    """Rebuild a tuning space from an exported scale file.

    Only the shape written by :func:`export_scl` is understood: description,
    count, then one pitch per line, with optional ``!`` comment lines.
    Cents values convert back to exact powers of two, so a round trip
    preserves the pitch set exactly.
    """
    body = [line.strip() for line in text.splitlines()]
    body = [line for line in body if line and not line.startswith("!")]
    if len(body) < 2:
        raise DefinitionError("scale file needs a description line and a count line")
    try:
        count = int(body[1])
    except ValueError:
        raise DefinitionError(f"count line must be an integer, got {body[1]!r}") from None
    pitch_lines = body[2:]
    if len(pitch_lines) != count:
        raise DefinitionError(f"expected {count} pitch lines, found {len(pitch_lines)}")
    points = [Exact(1)]
    for line in pitch_lines:
        points.append(_parse_pitch_token(line.split()[0]))
    steps = tuple(Ratio(points[i + 1] / points[i]) for i in range(count))
    return make_custom(standard_pitch, steps)


def _parse_pitch_token(token: str) -> Exact:
    if "." in token:  # cents line
        try:
            cents = Fraction(token)
        except ValueError:
            raise DefinitionError(f"bad cents value {token!r}") from None
        return Exact.pow2(cents / 1200)
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise DefinitionError(f"bad ratio {token!r}") from None
    if value <= 0:
        raise DefinitionError(f"ratio must be positive, got {token!r}")
    return Exact(value)

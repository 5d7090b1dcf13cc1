"""Command line interface.

Subcommands: table, freq, note, add, inverse, parse, verify, export-scl.
Wherever a tuning is needed, ``--tuning`` takes a preset (``12tet@440``,
``<n>tet@<hz>``, ``<n>edo@<hz>``), a definition file path, or an inline
definition document.  Note names address classes A-rooted, matching the
step indices of a 12-TET space tuned to A.

Exit codes: 0 on success (verification confirmed), 1 on validation or
verification failure, 2 on usage errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from .formats import emit_table, export_scl, load_tuning
from .harmony import harmonic_add_index, harmonic_inverse_index, verify_pcit
from .notation import (
    A_ROOTED,
    C_ROOTED,
    enharmonic_spellings,
    parse_note_name,
    render_note_name,
)
from .tuning import TuningSpace, make_nedo, make_ntet

_PRESET = re.compile(r"^(\d+)\s*(tet|edo)\s*@\s*([0-9][0-9./]*)$", re.IGNORECASE)


def resolve_tuning(text: str) -> TuningSpace:
    """A preset like ``12tet@440`` / ``5edo@100``, or a definition document/path."""
    match = _PRESET.match(text.strip())
    if match:
        n = int(match.group(1))
        kind = match.group(2).lower()
        pitch = Fraction(match.group(3))
        return (make_ntet if kind == "tet" else make_nedo)(pitch, n)
    return load_tuning(text)


def _parse_octave_range(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(-?\d+)(?:\.\.(-?\d+))?", text.strip())
    if not match:
        raise ValueError(f"octave range must look like 0..1, got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise ValueError(f"empty octave range {text!r}")
    return lo, hi


def _parse_coord(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(-?\d+)\s*,\s*(-?\d+)", text.strip())
    if not match:
        raise ValueError(f"coordinate must look like k,i (for example 0,3), got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _coord_from_args(space: TuningSpace, args: argparse.Namespace) -> tuple[int, int]:
    if args.coord is not None:
        return _parse_coord(args.coord)
    name, _, octave = args.name.partition("@")
    if space.n != 12:
        raise ValueError("note names address 12-class spaces only; use --coord")
    if octave:
        try:
            k = int(octave)
        except ValueError:
            raise ValueError(f"octave suffix must be an integer, got {octave!r}") from None
    else:
        k = 0
    return k, parse_note_name(name, A_ROOTED)


def _parse_class(text: str, n: int) -> int:
    try:
        value = int(text)
    except ValueError:
        if n != 12:
            raise ValueError(
                f"note names need n=12; with n={n} give a class integer, not {text!r}"
            ) from None
        return parse_note_name(text, A_ROOTED)
    if not 0 <= value < n:
        raise ValueError(f"class {value} out of range 0..{n - 1}")
    return value


def _cmd_table(args: argparse.Namespace) -> int:
    space = resolve_tuning(args.tuning)
    lo, hi = _parse_octave_range(args.octaves)
    sys.stdout.write(emit_table(space, lo, hi, fmt=args.format, precision=args.precision))
    return 0


def _cmd_freq(args: argparse.Namespace) -> int:
    space = resolve_tuning(args.tuning)
    value = space.pitch_at(_coord_from_args(space, args))
    print(f"{float(value):.{args.precision}f} Hz")
    return 0


def _cmd_note(args: argparse.Namespace) -> int:
    space = resolve_tuning(args.tuning)
    cls = space.canonical(_coord_from_args(space, args)).i
    if space.n == 12:
        spellings = ", ".join(str(s) for s in enharmonic_spellings(cls, A_ROOTED))
        print(f"class {cls} of {space.n}: {render_note_name(cls, A_ROOTED)} ({spellings})")
    else:
        print(f"class {cls} of {space.n}")
    return 0


def _cmd_add(args: argparse.Namespace) -> int:
    n = args.n
    a = _parse_class(args.a, n)
    b = _parse_class(args.b, n)
    result = harmonic_add_index(a, b, n)
    print(f"{a} + {b} = {result} (mod {n})")
    if n == 12:
        print(
            f"{render_note_name(a, A_ROOTED)} + {render_note_name(b, A_ROOTED)}"
            f" = {render_note_name(result, A_ROOTED)}"
        )
    return 0


def _cmd_inverse(args: argparse.Namespace) -> int:
    n = args.n
    a = _parse_class(args.a, n)
    result = harmonic_inverse_index(a, n)
    print(f"inverse of {a} = {result} (mod {n})")
    if n == 12:
        print(
            f"inverse of {render_note_name(a, A_ROOTED)}"
            f" = {render_note_name(result, A_ROOTED)}"
        )
    return 0


def _cmd_parse(args: argparse.Namespace) -> int:
    if args.convention:
        conv = A_ROOTED if args.convention == "a" else C_ROOTED
        print(parse_note_name(args.name, conv))
    else:
        a = parse_note_name(args.name, A_ROOTED)
        c = parse_note_name(args.name, C_ROOTED)
        print(f"{args.name}: class {a} (A-rooted), integer {c} (C-rooted)")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_pcit(
        args.n,
        exhaustive_limit=args.exhaustive_limit,
        samples=args.samples,
        seed=args.seed,
    )
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.verdict else 1


def _cmd_export_scl(args: argparse.Namespace) -> int:
    space = resolve_tuning(args.tuning)
    document = export_scl(space, description=args.name)
    if args.out == "-":
        sys.stdout.write(document)
    else:
        Path(args.out).write_text(document, encoding="utf-8")
        print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuningspaces",
        description="Exact tuning systems and note-class group verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tuning(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--tuning",
            required=True,
            help="preset (12tet@440, 5edo@100), definition file, or inline definition",
        )

    def add_selector(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--coord", help="coordinate k,i; write --coord=-1,3 for negative octaves"
        )
        group.add_argument("--name", help="note name with octave, such as C@-1 (n=12 only)")

    p = sub.add_parser("table", help="emit the frequency table over an octave range")
    add_tuning(p)
    p.add_argument(
        "--octaves",
        required=True,
        help="octave range lo..hi, e.g. 0..1 (write --octaves=-1..0 for negative ranges)",
    )
    p.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")
    p.add_argument("--precision", type=int, default=3, help="decimal places for Hz")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("freq", help="frequency of one partition point")
    add_tuning(p)
    add_selector(p)
    p.add_argument("--precision", type=int, default=3)
    p.set_defaults(func=_cmd_freq)

    p = sub.add_parser("note", help="the octave-equivalence class of a point")
    add_tuning(p)
    add_selector(p)
    p.set_defaults(func=_cmd_note)

    p = sub.add_parser("add", help="harmonic addition of two classes")
    p.add_argument("--n", type=int, required=True, help="number of classes")
    p.add_argument("a", help="class integer, or note name when n=12")
    p.add_argument("b", help="class integer, or note name when n=12")
    p.set_defaults(func=_cmd_add)

    p = sub.add_parser("inverse", help="harmonic inverse of a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("a", help="class integer, or note name when n=12")
    p.set_defaults(func=_cmd_inverse)

    p = sub.add_parser("parse", help="parse a note name to its class integer")
    p.add_argument("name")
    p.add_argument(
        "--convention",
        choices=("a", "c"),
        help="a: classes rooted at A; c: integers rooted at C; default prints both",
    )
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("verify", help="verify the note classes form the cyclic group Z_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive-limit", type=int, default=64)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export-scl", help="export the space as a Scala scale file")
    add_tuning(p)
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.add_argument("--name", help="description line override")
    p.set_defaults(func=_cmd_export_scl)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

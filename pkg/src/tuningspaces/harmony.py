"""Harmonic addition on note classes and brute-force group verification.

Class indices add by the wraparound rule: the plain sum when it stays
below n, otherwise the sum reduced once by n.  On canonical indices this
coincides with addition mod n.  The ``verify_*`` functions machine-check,
by exhaustive enumeration at small n and by sampling beyond a
configurable limit, that the note classes under this addition form a
group and that the index map onto the integers mod n is an isomorphism.

The checks deliberately run two independent routes: the addition table is
built from the wraparound rule, while the homomorphism law compares it
against Python's own ``%`` arithmetic.  A corrupted ``add`` callable can
be injected to prove the checker actually detects failures.
"""

from __future__ import annotations

import dataclasses
import json
import operator
import random
from collections.abc import Callable
from dataclasses import dataclass

from .notes import Note, NoteSet, note_set
from .tuning import TuningSpace

_MAX_RECORDED_FAILURES = 50


def harmonic_add_index(x: int, y: int, n: int) -> int:
    """Wraparound sum of two class indices: x + y, reduced once by n."""
    s = x + y
    return s - n if s >= n else s


def harmonic_inverse_index(x: int, n: int) -> int:
    """Index of the class that cancels x, namely n - x (and 0 for x = 0)."""
    return (n - x) % n


def harmonic_add(a: Note, b: Note) -> Note:
    """Add two notes of the same space by their class indices."""
    if a.space != b.space:
        raise ValueError("cannot add notes from different tuning spaces")
    return Note(a.space, harmonic_add_index(a.class_index, b.class_index, a.space.n))


def harmonic_inverse(a: Note) -> Note:
    """The note that sums with a to the tuning note (class 0)."""
    # n - a is a valid witness even for a = 0: index n names class 0.
    return Note(a.space, a.space.n - a.class_index)


def step_on_note(a: Note) -> Note:
    """Apply the class's own step: one index up, back to 0 past the top."""
    return Note(a.space, a.class_index + 1)


def note_from_steps(space: TuningSpace, x: int) -> Note:
    """Class reached after x upward steps from the tuning note."""
    return Note(space, operator.index(x) % space.n)


@dataclass(frozen=True)
class HarmonyGroup:
    """A note set equipped with harmonic addition."""

    note_set: NoteSet

    @property
    def n(self) -> int:
        return len(self.note_set)

    @property
    def identity(self) -> Note:
        """The tuning note, class 0."""
        return self.note_set[0]

    def add(self, a: Note, b: Note) -> Note:
        return harmonic_add(a, b)

    def inverse(self, a: Note) -> Note:
        return harmonic_inverse(a)

    def verify(self, **kwargs) -> "IsomorphismReport":
        return verify_pcit(self.n, **kwargs)


def harmony_group(space: TuningSpace) -> HarmonyGroup:
    return HarmonyGroup(note_set(space))


@dataclass(frozen=True)
class IsomorphismReport:
    """Outcome of checking the group axioms and the index map at one n.

    ``axiom_failures`` holds human-readable counterexamples (capped at
    50); ``failure_count`` is the true total.  ``exhaustive`` tells
    whether every pair and triple was enumerated or only a random sample.
    """

    n: int
    closed: bool
    associative: bool
    has_identity: bool
    has_inverses: bool
    injective: bool
    surjective: bool
    homomorphic: bool
    axiom_failures: tuple[str, ...]
    failure_count: int
    exhaustive: bool
    closure_pairs: int
    associativity_triples: int
    identity_elements: int
    inverse_elements: int
    injectivity_pairs: int
    surjectivity_classes: int
    homomorphism_pairs: int

    @property
    def verdict(self) -> bool:
        """True only when every flag holds and no counterexample was found."""
        return (
            self.closed
            and self.associative
            and self.has_identity
            and self.has_inverses
            and self.injective
            and self.surjective
            and self.homomorphic
            and self.failure_count == 0
        )

    def to_dict(self) -> dict:
        payload = dataclasses.asdict(self)
        payload["axiom_failures"] = list(self.axiom_failures)
        payload["verdict"] = self.verdict
        return payload

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        status = "confirmed" if self.verdict else "REFUTED"
        mode = "exhaustive" if self.exhaustive else "sampled"
        lines = [f"H_{self.n} ≅ Z_{self.n}: {status} ({mode})"]

        def law(name: str, passed: bool, count: int, unit: str) -> None:
            mark = "pass" if passed else "FAIL"
            lines.append(f"  {name:<14}{mark}  ({count} {unit})")

        law("closure", self.closed, self.closure_pairs, "pairs")
        law("associativity", self.associative, self.associativity_triples, "triples")
        law("identity", self.has_identity, self.identity_elements, "elements")
        law("inverses", self.has_inverses, self.inverse_elements, "elements")
        if self.injectivity_pairs or self.surjectivity_classes or self.homomorphism_pairs:
            law("injectivity", self.injective, self.injectivity_pairs, "pairs")
            law("surjectivity", self.surjective, self.surjectivity_classes, "classes")
            law("homomorphism", self.homomorphic, self.homomorphism_pairs, "pairs")
        for message in self.axiom_failures[:10]:
            lines.append(f"  counterexample: {message}")
        if self.failure_count > 10:
            lines.append(f"  ... {self.failure_count} counterexamples in total")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()


AddFn = Callable[[int, int], int]


def verify_group(
    n: int,
    *,
    add: AddFn | None = None,
    exhaustive_limit: int = 64,
    samples: int = 10_000,
    seed: int = 0,
) -> IsomorphismReport:
    """Check the group axioms for the n note classes.

    Closure and associativity run over every pair and triple when
    n <= exhaustive_limit, and over ``samples`` random draws otherwise.
    ``add`` replaces the built-in index addition so tests can feed the
    checker a corrupted operation; leave it None for the real thing.

    Only the axiom portion runs here; the isomorphism flags in the
    returned report are vacuously true with zero check counts.  Use
    :func:`verify_pcit` for the full check.
    """
    return _verify(n, add, False, exhaustive_limit, samples, seed)


def verify_pcit(
    n: int,
    *,
    add: AddFn | None = None,
    exhaustive_limit: int = 64,
    samples: int = 10_000,
    seed: int = 0,
) -> IsomorphismReport:
    """Check that the harmony group of order n is the cyclic group Z_n.

    Runs the axiom checks of :func:`verify_group` and then exercises the
    index map phi(class x) = x: injectivity over pairs, surjectivity over
    residues, and the homomorphism law
    ``phi(a + b) == (phi(a) + phi(b)) mod n``.
    """
    return _verify(n, add, True, exhaustive_limit, samples, seed)


def _verify(
    n: int,
    add: AddFn | None,
    check_iso: bool,
    exhaustive_limit: int,
    samples: int,
    seed: int,
) -> IsomorphismReport:
    n = operator.index(n)
    if n < 1:
        raise ValueError("group order must be at least 1")
    if add is None:
        def add(x: int, y: int) -> int:
            return harmonic_add_index(x, y, n)

    failures: list[str] = []
    total = 0

    def record(message: str) -> None:
        nonlocal total
        total += 1
        if len(failures) < _MAX_RECORDED_FAILURES:
            failures.append(message)

    exhaustive = n <= exhaustive_limit
    if exhaustive:
        stats = _check_exhaustive(n, add, check_iso, record)
    else:
        stats = _check_sampled(n, add, check_iso, record, samples, random.Random(seed))
    return IsomorphismReport(
        n=n,
        axiom_failures=tuple(failures),
        failure_count=total,
        exhaustive=exhaustive,
        **stats,
    )


def _class_ok(value: object, n: int) -> bool:
    return isinstance(value, int) and 0 <= value < n


def _check_exhaustive(n: int, add: AddFn, check_iso: bool, record) -> dict:
    r = range(n)

    closed = True
    table: list[list[int | None]] = []
    for a in r:
        row: list[int | None] = []
        for b in r:
            v = add(a, b)
            if not _class_ok(v, n):
                closed = False
                record(f"closure: {a} + {b} = {v!r}, not a class in 0..{n - 1}")
                v = None
            row.append(v)
        table.append(row)

    has_identity = True
    for x in r:
        if table[0][x] != x or table[x][0] != x:
            has_identity = False
            record(f"identity: 0 + {x} = {table[0][x]!r} and {x} + 0 = {table[x][0]!r}")

    has_inverses = True
    for a in r:
        w = harmonic_inverse_index(a, n)
        if table[a][w] != 0 or table[w][a] != 0:
            has_inverses = False
            record(f"inverses: {a} + {w} = {table[a][w]!r}, expected 0")

    associative = True
    associativity_triples = 0
    if closed:
        associativity_triples = n**3
        for a in r:
            row_a = table[a]
            for b in r:
                row_ab = table[row_a[b]]
                row_b = table[b]
                for c in r:
                    if row_ab[c] != row_a[row_b[c]]:
                        associative = False
                        record(
                            f"associativity: ({a}+{b})+{c} = {row_ab[c]} "
                            f"but {a}+({b}+{c}) = {row_a[row_b[c]]}"
                        )
    else:
        associative = False
        record("associativity: not checkable, closure already failed")

    injective = surjective = homomorphic = True
    injectivity_pairs = surjectivity_classes = homomorphism_pairs = 0
    if check_iso:
        # The candidate isomorphism sends class x to the integer x.
        phi = list(r)
        injectivity_pairs = n * (n - 1) // 2
        for x in r:
            for y in range(x + 1, n):
                if phi[x] == phi[y]:
                    injective = False
                    record(f"injectivity: classes {x} and {y} both map to {phi[x]}")
        surjectivity_classes = n
        image = {phi[x] for x in r}
        for z in r:
            if z not in image:
                surjective = False
                record(f"surjectivity: no class maps to {z}")
        if closed:
            homomorphism_pairs = n * n
            for x in r:
                row_x = table[x]
                for y in r:
                    expected = (phi[x] + phi[y]) % n
                    if phi[row_x[y]] != expected:
                        homomorphic = False
                        record(
                            f"homomorphism: phi({x}+{y}) = {phi[row_x[y]]} but "
                            f"phi({x}) + phi({y}) = {expected} (mod {n})"
                        )
        else:
            homomorphic = False
            record("homomorphism: not checkable, closure already failed")

    return dict(
        closed=closed,
        associative=associative,
        has_identity=has_identity,
        has_inverses=has_inverses,
        injective=injective,
        surjective=surjective,
        homomorphic=homomorphic,
        closure_pairs=n * n,
        associativity_triples=associativity_triples,
        identity_elements=n,
        inverse_elements=n,
        injectivity_pairs=injectivity_pairs,
        surjectivity_classes=surjectivity_classes,
        homomorphism_pairs=homomorphism_pairs,
    )


def _check_sampled(
    n: int, add: AddFn, check_iso: bool, record, samples: int, rng: random.Random
) -> dict:
    closed = True
    for _ in range(samples):
        a, b = rng.randrange(n), rng.randrange(n)
        v = add(a, b)
        if not _class_ok(v, n):
            closed = False
            record(f"closure: {a} + {b} = {v!r}, not a class in 0..{n - 1}")

    element_draws = min(n, samples)
    has_identity = True
    for _ in range(element_draws):
        x = rng.randrange(n)
        if add(0, x) != x or add(x, 0) != x:
            has_identity = False
            record(f"identity: 0 + {x} = {add(0, x)!r} and {x} + 0 = {add(x, 0)!r}")

    has_inverses = True
    for _ in range(element_draws):
        a = rng.randrange(n)
        w = harmonic_inverse_index(a, n)
        if add(a, w) != 0 or add(w, a) != 0:
            has_inverses = False
            record(f"inverses: {a} + {w} = {add(a, w)!r}, expected 0")

    associative = True
    for _ in range(samples):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        ab, bc = add(a, b), add(b, c)
        if not (_class_ok(ab, n) and _class_ok(bc, n)):
            continue  # already reported as a closure failure
        lhs, rhs = add(ab, c), add(a, bc)
        if lhs != rhs:
            associative = False
            record(f"associativity: ({a}+{b})+{c} = {lhs!r} but {a}+({b}+{c}) = {rhs!r}")

    injective = surjective = homomorphic = True
    injectivity_pairs = surjectivity_classes = homomorphism_pairs = 0
    if check_iso:
        def phi(z: int) -> int:
            # the candidate isomorphism: class index to integer residue
            return z

        injectivity_pairs = samples
        for _ in range(samples):
            x, y = rng.randrange(n), rng.randrange(n)
            if x != y and phi(x) == phi(y):
                injective = False
                record(f"injectivity: classes {x} and {y} both map to {phi(x)}")
        surjectivity_classes = element_draws
        for _ in range(element_draws):
            z = rng.randrange(n)
            if phi(z) != z:  # class z itself is the witness preimage
                surjective = False
                record(f"surjectivity: no class maps to {z}")
        homomorphism_pairs = samples
        for _ in range(samples):
            x, y = rng.randrange(n), rng.randrange(n)
            v = add(x, y)
            if not _class_ok(v, n):
                continue
            expected = (phi(x) + phi(y)) % n
            if phi(v) != expected:
                homomorphic = False
                record(
                    f"homomorphism: phi({x}+{y}) = {phi(v)!r} but "
                    f"phi({x}) + phi({y}) = {expected} (mod {n})"
                )

    return dict(
        closed=closed,
        associative=associative,
        has_identity=has_identity,
        has_inverses=has_inverses,
        injective=injective,
        surjective=surjective,
        homomorphic=homomorphic,
        closure_pairs=samples,
        associativity_triples=samples,
        identity_elements=element_draws,
        inverse_elements=element_draws,
        injectivity_pairs=injectivity_pairs,
        surjectivity_classes=surjectivity_classes,
        homomorphism_pairs=homomorphism_pairs,
    )

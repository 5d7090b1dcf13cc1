"""Exact positive reals of the form ``m * 2**e`` with rational m and e.

Every frequency this library manipulates lives in the set
``{m * 2**e : m, e rational, m > 0}``.  Rational pitches have ``e == 0``,
and equal-temperament pitches carry the octave fraction in ``e``.  The
set is closed under multiplication, division, scaling by ``2**k``, and
addition of two members that share the same exponent, which covers every
tuning construction here while keeping octave closure and equivalence
checks exact instead of float-approximate.

The stored pair is canonical: ``e`` is reduced into ``[0, 1)`` with the
integer part folded into ``m``, so equal values always carry equal
``(m, e)`` pairs.  Uniqueness follows from ``2**t`` being irrational for
every non-integer rational ``t``.

Conversion to ``float`` (used only for display) is accurate to well
under 1e-9 relative error; all decisions are made on the exact form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ExactnessError

ExactLike = Union["Exact", int, float, str, Fraction]


class Exact:
    """A positive real ``m * 2**e`` with rational mantissa and exponent."""

    __slots__ = ("m", "e")

    def __init__(self, m: int | float | str | Fraction = 1, e: int | str | Fraction = 0):
        m = Fraction(m)
        e = Fraction(e)
        if m <= 0:
            raise ValueError(f"exact value must be positive, got mantissa {m}")
        shift = math.floor(e)
        if shift:
            m *= Fraction(2) ** shift
            e -= shift
        self.m = m
        self.e = e

    @classmethod
    def pow2(cls, exponent: int | str | Fraction) -> "Exact":
        """The exact power ``2**exponent``."""
        return cls(1, Fraction(exponent))

    def times_pow2(self, k: int) -> "Exact":
        """Scale by ``2**k`` (octave shifts)."""
        return Exact(self.m, self.e + k)

    @property
    def is_rational(self) -> bool:
        return self.e == 0

    def as_fraction(self) -> Fraction:
        if self.e != 0:
            raise ExactnessError(f"{self} is irrational, not expressible as a fraction")
        return self.m

    # arithmetic ---------------------------------------------------------

    def __mul__(self, other: ExactLike) -> "Exact":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Exact(self.m * o.m, self.e + o.e)

    __rmul__ = __mul__

    def __truediv__(self, other: ExactLike) -> "Exact":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Exact(self.m / o.m, self.e - o.e)

    def __rtruediv__(self, other: ExactLike) -> "Exact":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Exact(o.m / self.m, o.e - self.e)

    def __add__(self, other: ExactLike) -> "Exact":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.e != o.e:
            raise ExactnessError(
                f"cannot add {self} and {o} exactly: the 2-exponents "
                f"{self.e} and {o.e} differ"
            )
        return Exact(self.m + o.m, self.e)

    __radd__ = __add__

    # ordering -----------------------------------------------------------

    def _compare(self, other: "Exact") -> int:
        de = self.e - other.e
        if de == 0:
            a, b = self.m, other.m
        else:
            # m1*2**e1 < m2*2**e2  iff  (m1/m2)**q < 2**(-p)  for de = p/q.
            # Both sides are rational, so the comparison is exact.
            a = (self.m / other.m) ** de.denominator
            b = Fraction(2) ** (-de.numerator)
        return (a > b) - (a < b)

    def __eq__(self, other: object) -> bool:
        o = _coerce_soft(other)
        if o is None:
            return NotImplemented
        return self.m == o.m and self.e == o.e

    def __lt__(self, other: ExactLike) -> bool:
        o = _coerce_soft(other)
        if o is None:
            return NotImplemented
        return self._compare(o) < 0

    def __le__(self, other: ExactLike) -> bool:
        o = _coerce_soft(other)
        if o is None:
            return NotImplemented
        return self._compare(o) <= 0

    def __gt__(self, other: ExactLike) -> bool:
        o = _coerce_soft(other)
        if o is None:
            return NotImplemented
        return self._compare(o) > 0

    def __ge__(self, other: ExactLike) -> bool:
        o = _coerce_soft(other)
        if o is None:
            return NotImplemented
        return self._compare(o) >= 0

    def __hash__(self) -> int:
        return hash((self.m, self.e))

    # rendering ----------------------------------------------------------

    def __float__(self) -> float:
        try:
            base = float(self.m)
        except OverflowError:
            return math.inf
        return base * 2.0 ** float(self.e)

    def __str__(self) -> str:
        if self.e == 0:
            return str(self.m)
        if self.m == 1:
            return f"2^({self.e})"
        return f"{self.m}*2^({self.e})"

    def __repr__(self) -> str:
        return f"Exact({str(self.m)!r}, {str(self.e)!r})"


def as_exact(value: ExactLike) -> Exact:
    """Coerce a number (or ``p/q`` / decimal string) to an Exact value."""
    if isinstance(value, Exact):
        return value
    return Exact(value)


def _coerce(value: object) -> Exact | None:
    if isinstance(value, Exact):
        return value
    if isinstance(value, (int, float, Fraction)):
        return Exact(value)
    return None


def _coerce_soft(value: object) -> Exact | None:
    # Like _coerce but maps non-positive numbers to None so that
    # comparisons fall back to NotImplemented instead of raising.
    if isinstance(value, Exact):
        return value
    if isinstance(value, (int, float, Fraction)):
        try:
            return Exact(value)
        except ValueError:
            return None
    return None

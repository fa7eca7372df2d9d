# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from typing import Union
from fractions import Fraction
from math import gcd
import re

from attr import dataclass

from .primitive import JSON
from .util import SerializableAttrs, SerializerError, deserializer, serializer

Rat = Fraction
RatLike = Union[Fraction, int, str]

_CANONICAL_RAT = re.compile(r"^(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


def parse_rat(raw: JSON) -> Fraction:
    """
    Parse a canonical rational string.

    Canonical means reduced, with a positive denominator that is omitted when it is 1, no sign on
    zero and no leading ``+`` or zeros.

    Examples:
        >>> parse_rat("3/2")
        Fraction(3, 2)
        >>> parse_rat("-4")
        Fraction(-4, 1)
        >>> parse_rat("2/4")  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
          ...
        SerializerError: '2/4' is not a canonical rational (use '1/2')
    """
    if not isinstance(raw, str):
        raise SerializerError(f"rationals are encoded as strings like '3/2', got {raw!r}")
    match = _CANONICAL_RAT.match(raw)
    if not match:
        raise SerializerError(f"{raw!r} is not a rational of the form 'p' or 'p/q'")
    num, den = int(match.group(1)), int(match.group(2) or 1)
    value = Fraction(num, den)
    if match.group(2) is not None and (den == 1 or num == 0 or gcd(num, den) != 1):
        raise SerializerError(
            f"{raw!r} is not a canonical rational (use {format_rat(value)!r})"
        )
    return value


def format_rat(value: Fraction) -> str:
    """Format a rational canonically (``"3/2"``, ``"4"``)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, places: int = 6) -> str:
    """
    Round half-even to a fixed number of decimal places, for humans reading reports.

    Examples:
        >>> format_decimal(Fraction(2, 3))
        '0.666667'
    """
    value = Fraction(value)
    scaled = round(value * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


def as_rat(value: RatLike) -> Fraction:
    """Coerce library inputs to :class:`Fraction`. Strings must be canonical."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@serializer(Fraction)
def serialize_fraction(value: Fraction) -> JSON:
    return format_rat(value)


@deserializer(Fraction)
def deserialize_fraction(raw: JSON) -> Fraction:
    return parse_rat(raw)


def iroot(value: int, t: int) -> int:
    """Floor of the real ``t``-th root of a non-negative integer."""
    if value < 0 or t < 1:
        raise ValueError("iroot needs value >= 0 and t >= 1")
    if value < 2 or t == 1:
        return value
    x = 1 << -(-value.bit_length() // t)
    while True:
        y = ((t - 1) * x + value // x ** (t - 1)) // t
        if y >= x:
            return x
        x = y


def root_upper(value: Fraction, t: int, bits: int = 30) -> Fraction:
    """
    The smallest multiple of ``2**-bits`` that is at least ``value ** (1/t)``.

    Examples:
        >>> root_upper(Fraction(4), 2)
        Fraction(2, 1)
        >>> root_upper(Fraction(2), 2, bits=4)
        Fraction(23, 16)
    """
    if value < 0:
        raise ValueError("root of a negative rational")
    scale = 1 << bits
    num, den = value.numerator * scale**t, value.denominator
    k = iroot(num // den, t)
    while k**t * den < num:
        k += 1
    return Fraction(k, scale)


def ceil_div(a: Fraction, b: Fraction) -> int:
    """``ceil(a / b)`` for rationals, without floats."""
    return -(-Fraction(a) // Fraction(b))


def is_multiple(value: Fraction, unit: Fraction) -> bool:
    return (Fraction(value) / Fraction(unit)).denominator == 1


def common_unit(*values: Fraction) -> Fraction:
    """The largest rational ``g`` such that every value is an integer multiple of ``g``."""
    values = [Fraction(v) for v in values if v != 0]
    if not values:
        raise ValueError("common_unit needs a nonzero value")
    num = 0
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    for v in values:
        num = gcd(num, abs(v.numerator) * (den // v.denominator))
    return Fraction(num, den)


@dataclass(frozen=True, order=True)
class EpsRat(SerializableAttrs):
    """
    A rational plus an integer multiple of a positive infinitesimal ``ε``.

    Order is lexicographic on ``(base, eps)``, which is the order of ``base + eps·ε`` for all
    small enough ``ε > 0``. Mixed arithmetic with plain rationals treats them as ``eps = 0``.
    """

    base: Fraction
    eps: int = 0

    @classmethod
    def of(cls, value: Union["EpsRat", RatLike]) -> "EpsRat":
        if isinstance(value, EpsRat):
            return value
        return cls(as_rat(value))

    def __add__(self, other: Union["EpsRat", RatLike]) -> "EpsRat":
        other = EpsRat.of(other)
        return EpsRat(self.base + other.base, self.eps + other.eps)

    __radd__ = __add__

    def __sub__(self, other: Union["EpsRat", RatLike]) -> "EpsRat":
        other = EpsRat.of(other)
        return EpsRat(self.base - other.base, self.eps - other.eps)

    def __rsub__(self, other: RatLike) -> "EpsRat":
        return EpsRat.of(other) - self

    def __neg__(self) -> "EpsRat":
        return EpsRat(-self.base, -self.eps)

    def plus_eps(self, count: int = 1) -> "EpsRat":
        return EpsRat(self.base, self.eps + count)

    def at(self, epsilon: Fraction) -> Fraction:
        """Evaluate with a concrete ``ε``."""
        return self.base + self.eps * Fraction(epsilon)

    def __str__(self) -> str:
        if not self.eps:
            return format_rat(self.base)
        sign = "+" if self.eps > 0 else "-"
        coeff = "" if abs(self.eps) == 1 else str(abs(self.eps))
        return f"{format_rat(self.base)}{sign}{coeff}ε"

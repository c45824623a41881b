"""Half-integer spin values stored exactly as doubled integers.

A spin j is represented by ``twice = 2j`` so that every quantity appearing
in angular-momentum formulas (triangle sums, factorial arguments, phases)
is reachable by integer arithmetic with no rounding.
"""

from __future__ import annotations

from fractions import Fraction


class HalfInt:
    """An exact integer or half-odd-integer, stored as its doubled value.

    Accepts an int, a Fraction with denominator 1 or 2, a float that is an
    exact multiple of 1/2, a string like ``"2"`` or ``"-3/2"``, or another
    HalfInt.
    """

    __slots__ = ("twice",)

    def __init__(self, value):
        if isinstance(value, HalfInt):
            t = value.twice
        elif isinstance(value, int):
            t = 2 * value
        elif isinstance(value, Fraction):
            if value.denominator == 1:
                t = 2 * value.numerator
            elif value.denominator == 2:
                t = value.numerator
            else:
                raise ValueError(f"not a half-integer: {value}")
        elif isinstance(value, float):
            t = 2 * value
            if t != int(t):
                raise ValueError(f"not a half-integer: {value}")
            t = int(t)
        elif isinstance(value, str):
            t = _parse_twice(value)
        else:
            raise TypeError(f"cannot interpret {value!r} as a half-integer")
        object.__setattr__(self, "twice", t)

    @classmethod
    def from_twice(cls, twice: int) -> "HalfInt":
        """Build from an already-doubled integer value."""
        obj = cls.__new__(cls)
        object.__setattr__(obj, "twice", int(twice))
        return obj

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __float__(self):
        return self.twice / 2.0

    def __add__(self, other):
        return HalfInt.from_twice(self.twice + HalfInt(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt.from_twice(self.twice - HalfInt(other).twice)

    def __rsub__(self, other):
        return HalfInt.from_twice(HalfInt(other).twice - self.twice)

    def __neg__(self):
        return HalfInt.from_twice(-self.twice)

    def __abs__(self):
        return HalfInt.from_twice(abs(self.twice))

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return HalfInt.from_twice(self.twice * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.twice == HalfInt(other).twice
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < HalfInt(other).twice

    def __le__(self, other):
        return self.twice <= HalfInt(other).twice

    def __gt__(self, other):
        return self.twice > HalfInt(other).twice

    def __ge__(self, other):
        return self.twice >= HalfInt(other).twice

    def __hash__(self):
        return hash(self.fraction)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({self})"


def _parse_twice(text: str) -> int:
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        if den.strip() != "2":
            raise ValueError(f"spin strings must be 'n' or 'n/2', got {text!r}")
        return int(num)
    return 2 * int(s)


def twice(value) -> int:
    """Doubled integer of any spin-like value (HalfInt, int, '3/2', ...)."""
    return HalfInt(value).twice

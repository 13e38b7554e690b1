"""Exact half-integer scalars.

Every extent-like quantity in this library lives in (1/2)*Z.  Storing the
doubled value as a plain int keeps all arithmetic exact; nothing in this
module (or anywhere downstream of it) touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True, eq=False, slots=True)
class HalfInt:
    """A number of the form k/2, stored as the integer ``doubled`` = k."""

    doubled: int

    def __post_init__(self) -> None:
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise TypeError(f"doubled value must be an int, got {self.doubled!r}")

    @classmethod
    def whole(cls, n: int) -> HalfInt:
        """The half-integer equal to the integer ``n``."""
        return cls(2 * n)

    @classmethod
    def parse(cls, text: str) -> HalfInt:
        """Parse "2", "-3" or "3/2", "-1/2" style strings."""
        text = text.strip()
        if "/" in text:
            num_text, den_text = text.split("/", 1)
            num, den = int(num_text), int(den_text)
            if den == 2:
                return cls(num)
            if den == 1:
                return cls.whole(num)
            raise ValueError(f"not a half-integer literal: {text!r}")
        return cls.whole(int(text))

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def ceil(self) -> int:
        """Smallest integer >= self (used for integrality round-ups)."""
        return -((-self.doubled) // 2)

    # -- arithmetic (HalfInt or int operands only; floats are rejected) -----

    @staticmethod
    def _coerce(other: object) -> "HalfInt":
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt.whole(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> HalfInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfInt(self.doubled + o.doubled)

    __radd__ = __add__

    def __sub__(self, other: object) -> HalfInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfInt(self.doubled - o.doubled)

    def __rsub__(self, other: object) -> HalfInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfInt(o.doubled - self.doubled)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.doubled)

    def __mul__(self, other: object) -> HalfInt:
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.doubled * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.doubled == o.doubled

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.doubled < o.doubled

    def __hash__(self) -> int:
        # Matches hash(int) when the value is integral, so mixed-key dicts work.
        if self.is_integer():
            return hash(self.doubled // 2)
        return hash(("HalfInt", self.doubled))

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.doubled})"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


def hsum(values) -> HalfInt:
    """Exact sum of an iterable of HalfInt/int values."""
    total = ZERO
    for v in values:
        total = total + v
    return total

"""Natural numbers extended by a single infinite element.

Addition and multiplication saturate at infinity, with the measure-theoretic
convention ``inf * 0 == 0``.  Finite values compare and hash like plain ints,
so ``ExtNat(3) == 3`` and both can key the same dict entry.
"""

from __future__ import annotations

import functools
import math
from typing import Union

from .errors import NegativeOrMalformedNumber

__all__ = ["ExtNat", "INF", "ZERO", "ONE", "as_extnat"]

_INF_LITERALS = ("inf", "infinity", "∞")


@functools.total_ordering
class ExtNat:
    __slots__ = ("_value",)

    def __init__(self, value: Union[int, str, float, "ExtNat"] = 0):
        if isinstance(value, ExtNat):
            self._value = value._value
            return
        if isinstance(value, bool):
            raise NegativeOrMalformedNumber(f"booleans are not multiplicities: {value!r}")
        if isinstance(value, int):
            if value < 0:
                raise NegativeOrMalformedNumber(f"negative multiplicity {value}")
            self._value = value
            return
        if isinstance(value, float) and math.isinf(value) and value > 0:
            self._value = None
            return
        if isinstance(value, str) and value.strip().lower() in _INF_LITERALS:
            self._value = None
            return
        raise NegativeOrMalformedNumber(f"not a natural number or 'inf': {value!r}")

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    def __int__(self) -> int:
        if self._value is None:
            raise OverflowError("cannot convert infinite ExtNat to int")
        return self._value

    def __index__(self) -> int:
        return int(self)

    def __bool__(self) -> bool:
        return self._value != 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._value is None or other._value is None:
            return INF
        return ExtNat(self._value + other._value)

    __radd__ = __add__

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._value == 0 or other._value == 0:
            return ZERO
        if self._value is None or other._value is None:
            return INF
        return ExtNat(self._value * other._value)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._value == other._value

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __hash__(self):
        return hash(self._value) if self._value is not None else hash(math.inf)

    def __repr__(self):
        return "ExtNat(inf)" if self._value is None else f"ExtNat({self._value})"

    def __str__(self):
        return "inf" if self._value is None else str(self._value)

    def to_json(self) -> Union[int, str]:
        """Wire form: a JSON integer, or the string ``"inf"``."""
        return "inf" if self._value is None else self._value


def _coerce(other):
    if isinstance(other, ExtNat):
        return other
    if isinstance(other, int) and not isinstance(other, bool):
        if other < 0:
            return NotImplemented
        return ExtNat(other)
    if isinstance(other, float) and math.isinf(other) and other > 0:
        return INF
    return NotImplemented


def as_extnat(value) -> ExtNat:
    return value if isinstance(value, ExtNat) else ExtNat(value)


INF = ExtNat("inf")
ZERO = ExtNat(0)
ONE = ExtNat(1)

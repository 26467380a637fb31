"""Exact polynomials in one variable t with integer coefficients.

A polynomial is stored densely: ``coeffs[k]`` is the coefficient of
``t^k``, the top entry is nonzero, and the zero polynomial is the empty
tuple.  All arithmetic is plain Python integer arithmetic, so nothing
ever overflows or rounds.

The one nonstandard primitive is :func:`divide_by_one_plus_t`, synthetic
division at the root -1.  A polynomial is divisible by ``1 + t`` exactly
when it vanishes at -1, and the nonnegativity of the quotient is what
:mod:`mbaudit.morsebott` ultimately certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class NotDivisibleError(ValueError):
    """Division by 1 + t left a nonzero remainder."""


@dataclass(frozen=True, init=False)
class IntPoly:
    """An integer polynomial in t.

    >>> p = IntPoly([1, 1, 0, 0, 1, 1])
    >>> str(p)
    '1 + t + t^4 + t^5'
    >>> p.evaluate(-1)
    0
    >>> str(IntPoly([0, 1, -1, 1]))
    't - t^2 + t^3'
    >>> IntPoly([1, 0, 0]) == IntPoly([1])
    True
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def term(degree: int, coefficient: int = 1) -> IntPoly:
        """The monomial ``coefficient * t^degree``.

        >>> str(IntPoly.term(3, -2))
        '-2*t^3'
        """
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return IntPoly([0] * degree + [coefficient])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; undefined (an error) for zero."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of t^k, zero beyond the stored range.

        >>> IntPoly([1, 2]).coefficient(7)
        0
        """
        if k < 0:
            raise ValueError("degree must be nonnegative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: IntPoly) -> IntPoly:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        """Product, by convolution of coefficients.

        >>> str(IntPoly([1, 1]) * IntPoly([0, 1, -1, 1]))
        't + t^4'
        """
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPoly:
        """Multiply by t^k (shift all degrees up by k >= 0).

        >>> str(IntPoly([1, 0, 0, 1]).shift(1))
        't + t^4'
        """
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def evaluate(self, x: int) -> int:
        """Value at an integer point, by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = IntPoly()
ONE = IntPoly([1])
ONE_PLUS_T = IntPoly([1, 1])


def divide_by_one_plus_t(p: IntPoly) -> IntPoly:
    """The unique q with p = (1 + t) * q, if it exists.

    Synthetic division at the root -1: q_k = p_k - q_{k-1}.  Divisibility
    is equivalent to p(-1) = 0; otherwise :class:`NotDivisibleError` is
    raised and the remainder p(-1) is left in the message.

    >>> str(divide_by_one_plus_t(IntPoly([0, 1, 1, 1, 1])))
    't + t^3'
    >>> divide_by_one_plus_t(IntPoly([1, 0, 1]))
    Traceback (most recent call last):
        ...
    mbaudit.polyalg.NotDivisibleError: not divisible by 1 + t (remainder 2)
    """
    if p.is_zero():
        return ZERO
    q: list[int] = []
    prev = 0
    for c in p.coeffs:
        prev = c - prev
        q.append(prev)
    # after the loop, prev is the remainder p(-1) * (-1)^deg; test p directly
    remainder = p.evaluate(-1)
    if remainder != 0:
        raise NotDivisibleError(f"not divisible by 1 + t (remainder {remainder})")
    assert q[-1] == 0
    return IntPoly(q[:-1])


if __name__ == "__main__":
    import doctest

    doctest.testmod()

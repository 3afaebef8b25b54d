"""Exact integer and rational kernel shared by every other module.

Nothing here (or anywhere else in the library) touches floating point:
root comparisons go through cross-multiplied integer inequalities, and
rationals are plain ``fractions.Fraction`` values, which already keep
themselves reduced with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.  Signals a bug, never bad input."""


def isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer."""
    if n < 0:
        raise ValueError(f"isqrt is undefined for negative input {n}")
    return math.isqrt(n)


def perfect_square_root(n: int) -> int | None:
    """Exact square root of n, or None when n is not a perfect square.

    Negative inputs return None rather than raising: they are never
    perfect squares, and callers probe speculatively.
    """
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def cmp_to_root(q: Rational | int, k: int, h: int = 1) -> int:
    """Order a nonnegative rational q against sqrt(k/h) exactly.

    Returns -1, 0 or +1 for q below, equal to or above the root.
    Since both sides are nonnegative, squaring preserves the order and
    the comparison reduces to num(q)^2 * h versus k * den(q)^2.
    """
    if k < 0:
        raise ValueError(f"radicand numerator must be nonnegative, got {k}")
    if h < 1:
        raise ValueError(f"radicand denominator must be positive, got {h}")
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"cmp_to_root expects a nonnegative rational, got {q}")
    lhs = q.numerator * q.numerator * h
    rhs = k * q.denominator * q.denominator
    return (lhs > rhs) - (lhs < rhs)

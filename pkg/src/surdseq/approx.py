"""Certified decimal digits of sqrt(k/h) from exact convergents.

No digit is ever printed on faith.  A candidate floor value t for
10^D sqrt(k/h) is accepted only if t^2 h <= k 10^(2D) < (t+1)^2 h,
which pins it as the exact integer part; the convergent engines
(plain iteration, index jumping, Newton) merely propose candidates
and can only agree with each other or fail loudly.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .exact import ConsistencyError, isqrt
from .identities import fast_term
from .newton import newton_start, newton_step
from .sequences import Family, SeqSpec, coupled_stream


class Method(Enum):
    LINEAR = "linear"
    JUMP = "jump"
    NEWTON = "newton"


def floor_root_scaled(k: int, h: int, digits: int) -> int:
    """Ground truth floor(10^digits * sqrt(k/h)) via integer isqrt.

    floor(x/h) = floor(floor(x)/h) for integer h, so the nested floors
    collapse and no guard digits are needed.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    if digits < 0:
        raise ValueError(f"digits must be nonnegative, got {digits}")
    return isqrt(k * h * 10 ** (2 * digits)) // h


def _format_digits(t: int, digits: int) -> str:
    raw = str(t).rjust(digits + 1, "0")
    return raw[:-digits] + "." + raw[-digits:]


def certify_digits(a: int, b: int, k: int, h: int, digits: int) -> str | None:
    """Digit string of sqrt(k/h) truncated to `digits` places, if a/b
    is sharp enough to prove it; None otherwise.

    The certificate compares t = floor(10^digits a / b) against the
    scaled radicand on both sides, all in integers.
    """
    if a < 0 or b < 1:
        raise ValueError(f"need a >= 0 and b >= 1, got a={a}, b={b}")
    if k < 1 or h < 1:
        raise ValueError(f"need k >= 1 and h >= 1, got k={k}, h={h}")
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    t = 10 ** digits * a // b
    scaled = k * 10 ** (2 * digits)
    if t * t * h <= scaled < (t + 1) * (t + 1) * h:
        return _format_digits(t, digits)
    return None


def _convergents(k: int, h: int, method: Method) -> Iterator[tuple[int, int, int]]:
    """Yield (index, numerator, denominator) proposals for sqrt(k/h)."""
    if method is Method.LINEAR:
        family = SeqSpec(Family.AB, k=k) if h == 1 else SeqSpec(Family.UV, k=k, h=h)
        stream = coupled_stream(family)
        next(stream)  # n = 0 has denominator 0 in the uv family
        for pair in stream:
            yield pair.n, pair.num, pair.den
    elif method is Method.JUMP:
        if h != 1:
            raise ValueError("index jumping works on the h = 1 family only")
        index = 1
        while True:
            pair = fast_term(k, index)
            yield index, pair.num, pair.den
            index *= 2
    elif method is Method.NEWTON:
        state = newton_start(k, h)
        while True:
            state = newton_step(state)
            yield state.n, state.a, state.b
    else:
        raise ValueError(f"unknown method {method!r}")


def _error_bound(a: int, b: int, k: int, h: int) -> Fraction:
    # |a/b - sqrt(k/h)| = |h a^2 - k b^2| / (h b^2 (a/b + sqrt(k/h))),
    # and replacing the root by any smaller nonnegative L keeps it an
    # upper bound; L is the root truncated to eight places.
    guard = 10 ** 8
    lower = Fraction(isqrt(k * h * guard * guard), h * guard)
    return Fraction(abs(h * a * a - k * b * b)) / (h * b * b * (Fraction(a, b) + lower))


@dataclass(frozen=True)
class ApproxResult:
    digits: str
    n_used: int
    method: Method
    error_bound: Fraction
    k: int
    h: int


def approximate(k: int, h: int, digits: int, method: Method = Method.LINEAR) -> ApproxResult:
    """Drive one convergent engine until the digit string certifies.

    Returns the certified digits along with the index that sufficed
    and an exact upper bound on |a/b - sqrt(k/h)| at that index.
    """
    if k < 1 or h < 1:
        raise ValueError(f"need k >= 1 and h >= 1, got k={k}, h={h}")
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    for index, num, den in _convergents(k, h, method):
        out = certify_digits(num, den, k, h, digits)
        if out is not None:
            return ApproxResult(out, index, method, _error_bound(num, den, k, h), k, h)
    raise AssertionError("convergent stream is infinite")


def cf_convergents(k: int, count: int) -> list[Fraction]:
    """First continued-fraction convergents of sqrt(k), k nonsquare.

    An independent yardstick: it shares no code with the pair
    recurrences, so agreement between the two is worth something.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    a0 = isqrt(k) if k >= 0 else 0
    if k < 2 or a0 * a0 == k:
        raise ValueError(f"continued fraction needs nonsquare k >= 2, got {k}")
    m, d, a = 0, 1, a0
    h_cur, h_prev = a0, 1
    k_cur, k_prev = 1, 0
    out = [Fraction(h_cur, k_cur)]
    while len(out) < count:
        m = d * a - m
        d = (k - m * m) // d
        a = (a0 + m) // d
        h_cur, h_prev = a * h_cur + h_prev, h_cur
        k_cur, k_prev = a * k_cur + k_prev, k_cur
        out.append(Fraction(h_cur, k_cur))
    return out


class _Meter:
    """Tallies big-integer work done through _MeteredInt values."""

    def __init__(self) -> None:
        self.multiplications = 0
        self.peak_bits = 0

    def note(self, value: int) -> None:
        bits = value.bit_length()
        if bits > self.peak_bits:
            self.peak_bits = bits


class _MeteredInt(int):
    """int that reports multiplications and operand size to a meter.

    Seeding one computation parameter with this type is enough: every
    arithmetic result is wrapped again, so the instrumentation spreads
    through the whole orbit by itself.
    """

    meter: _Meter

    def __new__(cls, value: int, meter: _Meter) -> "_MeteredInt":
        obj = super().__new__(cls, value)
        obj.meter = meter
        meter.note(value)
        return obj

    def _wrap(self, value: int) -> "_MeteredInt":
        return _MeteredInt(value, self.meter)

    def __mul__(self, other: object) -> "_MeteredInt":
        if not isinstance(other, int):
            return NotImplemented
        self.meter.multiplications += 1
        return self._wrap(int(self) * int(other))

    __rmul__ = __mul__

    def __add__(self, other: object) -> "_MeteredInt":
        if not isinstance(other, int):
            return NotImplemented
        return self._wrap(int(self) + int(other))

    __radd__ = __add__

    def __sub__(self, other: object) -> "_MeteredInt":
        if not isinstance(other, int):
            return NotImplemented
        return self._wrap(int(self) - int(other))

    def __rsub__(self, other: object) -> "_MeteredInt":
        if not isinstance(other, int):
            return NotImplemented
        return self._wrap(int(other) - int(self))

    def __floordiv__(self, other: object) -> "_MeteredInt":
        if not isinstance(other, int):
            return NotImplemented
        return self._wrap(int(self) // int(other))

    def __rfloordiv__(self, other: object) -> "_MeteredInt":
        if not isinstance(other, int):
            return NotImplemented
        return self._wrap(int(other) // int(self))

    def __pow__(self, exponent: object, modulo: object = None) -> "_MeteredInt":
        if not isinstance(exponent, int) or modulo is not None:
            return NotImplemented
        self.meter.multiplications += max(int(exponent) - 1, 0)
        return self._wrap(int(self) ** int(exponent))

    def __neg__(self) -> "_MeteredInt":
        return self._wrap(-int(self))


@dataclass(frozen=True)
class BenchRecord:
    method: Method
    k: int
    digits_requested: int
    digits: str
    iterations: int
    multiplications: int
    peak_bits: int
    wall_time_s: float


def bench_methods(k: int, digits: int, methods: Sequence[Method]) -> list[BenchRecord]:
    """Run each method to certification on sqrt(k), metering the work.

    iterations counts certification attempts; multiplications and
    peak_bits count actual big-integer traffic, measured by seeding k
    itself as a metered integer.  All methods must land on the same
    digit string or the whole run is thrown out as inconsistent.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    if not methods:
        raise ValueError("need at least one method")
    records = []
    for method in methods:
        meter = _Meter()
        metered_k = _MeteredInt(k, meter)
        started = time.perf_counter()
        iterations = 0
        certified = None
        for _, num, den in _convergents(metered_k, 1, method):
            iterations += 1
            certified = certify_digits(num, den, metered_k, 1, digits)
            if certified is not None:
                break
        elapsed = time.perf_counter() - started
        records.append(
            BenchRecord(
                method=method,
                k=k,
                digits_requested=digits,
                digits=certified,
                iterations=iterations,
                multiplications=meter.multiplications,
                peak_bits=meter.peak_bits,
                wall_time_s=elapsed,
            )
        )
    for record in records[1:]:
        if record.digits != records[0].digits:
            raise ConsistencyError(
                f"methods disagree at k={k}, digits={digits}: "
                f"{records[0].digits} vs {record.digits}"
            )
    return records

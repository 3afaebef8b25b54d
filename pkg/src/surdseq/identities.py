"""Index arithmetic on the base pair: doubling, addition, fast jumps.

All of these trade long iteration for a handful of big multiplies.
Where an identity is cheap to confirm against plain iteration, the
function confirms it before returning; the logarithmic routines are
instead exercised by the verification suites, since checking them
directly would erase their advantage.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact import ConsistencyError, perfect_square_root
from .sequences import Family, SeqSpec, TermPair, coupled_iterate


def _ab_terms(k: int, count: int) -> list[TermPair]:
    return coupled_iterate(SeqSpec(Family.AB, k=k), count)


def pell_residual(k: int, n: int) -> int:
    """a_n^2 - k b_n^2, confirmed against its closed value (1-k)^(n+1).

    The sign alternates, which is what makes consecutive ratios
    bracket sqrt(k) from both sides.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    _, a, b = _ab_terms(k, n + 1)[n]
    residual = a * a - k * b * b
    if residual != (1 - k) ** (n + 1):
        raise ConsistencyError(f"residual broke at k={k}, n={n}: got {residual}")
    return residual


def index_double(k: int, n: int) -> int:
    """a_{2n} from the two terms a_{n-1}, a_n alone.

    Uses a_{2n} = 2 a_{n-1} a_n - (1-k)^n and checks the result
    against direct iteration before handing it back.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    terms = _ab_terms(k, 2 * n + 1)
    doubled = 2 * terms[n - 1].num * terms[n].num - (1 - k) ** n
    if doubled != terms[2 * n].num:
        raise ConsistencyError(f"index doubling broke at k={k}, n={n}")
    return doubled


def sqrt_double(k: int, n: int, a_n: int, b_n: int) -> TermPair:
    """(a_{2n}, b_{2n}) recovered from (a_n, b_n) and nothing else.

    Both intermediate radicands must come out as perfect squares and
    every division must be exact; any misfire means the inputs were
    not a genuine pair for this k and n.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    if a_n < 1 or b_n < 1:
        raise ValueError("pair terms are positive")
    w = (1 - k) ** (n + 1)

    def reject() -> ValueError:
        return ValueError(f"({a_n}, {b_n}) is not the pair at index {n} for k={k}")

    rad_a, rem = divmod(a_n * a_n - w, k)
    if rem:
        raise reject()
    root_a = perfect_square_root(rad_a)
    if root_a is None:
        raise reject()
    num_a, rem = divmod(2 * k * a_n * root_a - 2 * a_n * a_n, k - 1)
    if rem:
        raise reject()
    a_doubled = num_a - (1 - k) ** n

    root_b = perfect_square_root(k * b_n * b_n + w)
    if root_b is None:
        raise reject()
    num_b, rem = divmod(w + 2 * k * b_n * b_n - 2 * b_n * root_b, k - 1)
    if rem:
        raise reject()
    return TermPair(2 * n, a_doubled, num_b)


def two_power_ladder(k: int, levels: int) -> list[TermPair]:
    """Pairs at indices 1, 2, 4, ..., 2^levels by repeated sqrt_double."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if levels < 0:
        raise ValueError(f"levels must be nonnegative, got {levels}")
    pair = TermPair(1, k + 1, 2)
    out = [pair]
    for _ in range(levels):
        pair = sqrt_double(k, pair.n, pair.num, pair.den)
        out.append(pair)
    return out


def addition_jump(k: int, m: int, n: int) -> TermPair:
    """(a, b) at index m + n + 1 from the pairs at m-1, m, n, n+1.

    The b side is the index addition formula as it stands.  The a side
    needs b_{m+n}, whose own formula wants b_{n-1}; substituting
    b_{n-1} = (a_n - b_n)/(k - 1) makes the k - 1 cancel, so the whole
    computation stays on the four allowed indices.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    terms = _ab_terms(k, max(m, n + 1) + 1)
    b_prev, b_m = terms[m - 1].den, terms[m].den
    a_n, b_n = terms[n].num, terms[n].den
    b_next = terms[n + 1].den
    b_hi = (k - 1) * b_prev * b_n + b_m * b_next
    b_lo = b_prev * (a_n - b_n) + b_m * b_n
    return TermPair(m + n + 1, (k - 1) * b_lo + b_hi, b_hi)


def fast_term(k: int, n: int) -> TermPair:
    """(a_n, b_n) in O(log n) big multiplies via binary powering.

    Walks the bits of n + 1 over the pair (p, q) standing for
    p + q sqrt(k), squaring at each bit and multiplying in one more
    factor of 1 + sqrt(k) when the bit is set.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    p, q = 1, 1
    for bit in bin(n + 1)[3:]:
        p, q = p * p + k * q * q, 2 * p * q
        if bit == "1":
            p, q = p + k * q, p + q
    return TermPair(n, p, q)


@dataclass(frozen=True)
class FailureWitness:
    """First counterexample an identity check ran into."""

    n: int
    m: int | None
    lhs: object
    rhs: object


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of sweeping one identity over an index range."""

    identity: str
    k: int
    n_max: int
    passes: int
    failure: FailureWitness | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

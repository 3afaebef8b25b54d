"""Digit certification, convergence behavior, and the bench meter."""
from fractions import Fraction

import pytest

from surdseq.approx import (
    Method,
    _Meter,
    _MeteredInt,
    approximate,
    bench_methods,
    certify_digits,
    cf_convergents,
    floor_root_scaled,
)
from surdseq.exact import cmp_to_root
from surdseq.identities import fast_term
from surdseq.newton import newton_run
from surdseq.sequences import Family, SeqSpec, coupled_iterate


def format_truth(k, h, digits):
    raw = str(floor_root_scaled(k, h, digits)).rjust(digits + 1, "0")
    return raw[:-digits] + "." + raw[-digits:]


def test_floor_root_scaled_known_values():
    assert floor_root_scaled(2, 1, 5) == 141421
    assert floor_root_scaled(2, 3, 4) == 8164
    assert floor_root_scaled(9, 1, 4) == 30000
    with pytest.raises(ValueError):
        floor_root_scaled(0, 1, 4)
    with pytest.raises(ValueError):
        floor_root_scaled(2, 0, 4)
    with pytest.raises(ValueError):
        floor_root_scaled(2, 1, -1)


def test_certify_accepts_only_sharp_terms():
    assert certify_digits(17, 12, 2, 1, 2) == "1.41"
    assert certify_digits(3, 2, 2, 1, 3) is None
    assert certify_digits(1, 1, 1, 1, 4) == "1.0000"


def test_certify_validation():
    with pytest.raises(ValueError):
        certify_digits(-1, 2, 2, 1, 3)
    with pytest.raises(ValueError):
        certify_digits(3, 0, 2, 1, 3)
    with pytest.raises(ValueError):
        certify_digits(3, 2, 2, 1, 0)
    with pytest.raises(ValueError):
        certify_digits(3, 2, 0, 1, 3)


@pytest.mark.parametrize("method", list(Method))
@pytest.mark.parametrize("k", [2, 3, 5, 7, 10])
def test_certified_digits_match_ground_truth(method, k):
    for digits in (5, 25):
        result = approximate(k, 1, digits, method)
        assert result.digits == format_truth(k, 1, digits)
        assert result.method is method


def test_rational_target_certifies_instantly():
    result = approximate(9, 4, 6)
    assert result.digits == "1.500000"


def test_uv_methods_agree_with_truth():
    for method in (Method.LINEAR, Method.NEWTON):
        result = approximate(2, 3, 12, method)
        assert result.digits == format_truth(2, 3, 12)


def test_jump_requires_unit_denominator():
    with pytest.raises(ValueError):
        approximate(2, 3, 8, Method.JUMP)


def test_approximate_validation():
    with pytest.raises(ValueError):
        approximate(0, 1, 5)
    with pytest.raises(ValueError):
        approximate(2, 0, 5)
    with pytest.raises(ValueError):
        approximate(2, 1, 0)


def test_digit_strings_nest_as_prefixes():
    short = approximate(7, 1, 10).digits
    long = approximate(7, 1, 30).digits
    assert long.startswith(short)


def test_error_bound_brackets_the_root():
    for k, digits in ((2, 10), (5, 20)):
        result = approximate(k, 1, digits)
        pair = fast_term(k, result.n_used)
        q = Fraction(pair.num, pair.den)
        assert cmp_to_root(q + result.error_bound, k) >= 0
        low = q - result.error_bound
        assert low < 0 or cmp_to_root(low, k) <= 0
        assert result.error_bound < Fraction(1, 10 ** digits)


def closer(x, y, k, h):
    """True when y is strictly nearer sqrt(k/h) than x (both exact)."""
    mid = (x + y) / 2
    side = 1 if y > x else -1
    return side * cmp_to_root(mid, k, h) == -1


def test_base_pair_error_decreases_every_step():
    # from n = 1 on; at n = 0 a square k sits exactly between the
    # first two ratios (k = 9 gives 1 and 5 around 3)
    for k in range(2, 13):
        terms = coupled_iterate(SeqSpec(Family.AB, k=k), 31)
        ratios = [Fraction(t.num, t.den) for t in terms]
        for n in range(1, 30):
            assert closer(ratios[n], ratios[n + 1], k, 1)


def test_uv_error_monotone_after_settling():
    # the generalized pair can wobble at first; each case settles by
    # the recorded index and is strictly monotone afterwards
    settled = {(2, 3): 1, (5, 2): 2, (7, 4): 4}
    for (k, h), start in settled.items():
        terms = coupled_iterate(SeqSpec(Family.UV, k=k, h=h), 42)
        ratios = [Fraction(t.num, t.den) for t in terms[1:]]  # drop den 0
        for n in range(start, 40):
            assert closer(ratios[n - 1], ratios[n], k, h)
    # pin one wobble so the settling indices above stay honest
    terms = coupled_iterate(SeqSpec(Family.UV, k=7, h=4), 6)
    ratios = [Fraction(t.num, t.den) for t in terms[1:]]
    assert not closer(ratios[2], ratios[3], 7, 4)


def correct_places(a, b, k, limit=250):
    best = 0
    for d in range(1, limit + 1):
        if 10 ** d * a // b == floor_root_scaled(k, 1, d):
            best = d
        else:
            break
    return best


def test_newton_doubles_correct_digits():
    expected = {
        2: [0, 0, 2, 5, 11, 23, 47, 96, 195],
        3: [0, 0, 1, 3, 7, 17, 35, 71, 145],
        5: [0, 0, 0, 2, 5, 12, 25, 52, 105],
    }
    for k, counts in expected.items():
        run = newton_run(k, 8)
        got = [correct_places(st.a, st.b, k) for st in run]
        assert got == counts
        for n in range(8):
            if got[n] >= 1:
                assert got[n + 1] >= 2 * got[n]


def test_cf_convergents_known_values():
    assert cf_convergents(2, 4) == [
        Fraction(1), Fraction(3, 2), Fraction(7, 5), Fraction(17, 12)]
    assert cf_convergents(7, 4) == [
        Fraction(2), Fraction(3), Fraction(5, 2), Fraction(8, 3)]


def test_cf_convergents_validation():
    with pytest.raises(ValueError):
        cf_convergents(9, 4)
    with pytest.raises(ValueError):
        cf_convergents(1, 4)
    with pytest.raises(ValueError):
        cf_convergents(2, 0)


def test_base_pair_ratios_are_cf_convergents_for_small_k():
    for k in (2, 3):
        cf = set(cf_convergents(k, 40))
        for t in coupled_iterate(SeqSpec(Family.AB, k=k), 16):
            assert Fraction(t.num, t.den) in cf


def test_meter_counts_multiplications():
    meter = _Meter()
    x = _MeteredInt(3, meter)
    y = x * 4
    assert y == 12 and isinstance(y, _MeteredInt)
    assert meter.multiplications == 1
    _ = 5 * y
    assert meter.multiplications == 2
    z = y + 1
    assert isinstance(z, _MeteredInt)
    assert meter.multiplications == 2  # additions are free
    _ = z ** 3
    assert meter.multiplications == 4
    assert meter.peak_bits >= (13 ** 3).bit_length()


def test_bench_methods_agree_and_rank():
    records = bench_methods(2, 50, list(Method))
    assert len({rec.digits for rec in records}) == 1
    assert records[0].digits == format_truth(2, 1, 50)
    by_method = {rec.method: rec for rec in records}
    assert by_method[Method.NEWTON].iterations < by_method[Method.LINEAR].iterations
    for rec in records:
        assert rec.multiplications > 0
        assert rec.peak_bits > 0
        assert rec.wall_time_s >= 0.0


def test_bench_validation():
    with pytest.raises(ValueError):
        bench_methods(1, 10, [Method.LINEAR])
    with pytest.raises(ValueError):
        bench_methods(2, 0, [Method.LINEAR])
    with pytest.raises(ValueError):
        bench_methods(2, 10, [])

"""Index jumping: reaching far terms without walking there.

Run with: python3 demos/identity_ladder.py
"""
import time

from surdseq import (
    Family,
    SeqSpec,
    coupled_iterate,
    fast_term,
    pell_residual,
    sqrt_double,
    two_power_ladder,
)

K = 2

print("The residual a^2 - k b^2 alternates sign, so consecutive ratios")
print(f"bracket sqrt({K}) from both sides:")
for n in range(6):
    print(f"  n={n}  residual = {pell_residual(K, n):>2}")

print()
print("sqrt_double jumps from index n to 2n using only (a_n, b_n);")
print("the intermediate radicands must be perfect squares, which makes")
print("forged inputs impossible to sneak past it:")
pair = coupled_iterate(SeqSpec(Family.AB, k=K), 4)[3]
doubled = sqrt_double(K, pair.n, pair.num, pair.den)
print(f"  from n={pair.n}: ({pair.num}, {pair.den})  ->  "
      f"n={doubled.n}: ({doubled.num}, {doubled.den})")
try:
    sqrt_double(K, 3, pair.num + 1, pair.den)
except ValueError as exc:
    print(f"  tampered numerator rejected: {exc}")

print()
print("Chaining the jump reaches index 2^levels in a handful of steps:")
for t in two_power_ladder(K, 5):
    print(f"  index {t.n:>2}: {str(t.num)[:30]}{'...' if t.num > 10**30 else ''}")

print()
print("fast_term does the general case in O(log n) multiplies.")
n = 200_000
started = time.perf_counter()
big = fast_term(K, n)
elapsed = time.perf_counter() - started
bits = big.num.bit_length()
print(f"  a_{n} has {bits} bits (about {bits * 30103 // 100000} "
      f"digits), computed in {elapsed:.3f}s")
check = coupled_iterate(SeqSpec(Family.AB, k=K), 1001)[1000]
assert fast_term(K, 1000) == check
print("  spot check against plain iteration at n = 1000: equal")

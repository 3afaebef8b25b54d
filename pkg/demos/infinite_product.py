"""An infinite product for sqrt((r+1)/(r-1)) with exact error control.

Run with: python3 demos/infinite_product.py
"""
from fractions import Fraction

from surdseq import cd_run, newton_run, product_limit_gap

R = 3

print(f"c_1 = {R}, c_(n+1) = 2 c_n^2 - 1 and the partial products of")
print(f"(1 + 1/c_i) walk up to sqrt(({R}+1)/({R}-1)) = sqrt(2):")
for st in cd_run(R, 5)[1:]:
    value = st.partial
    print(f"  n={st.n}  c={str(st.c)[:25]:<25}  partial = {float(value):.15f}")
print(f"  target                             sqrt(2) = 1.414213562373095")

print()
print("The distance to the limit is an exact Rational, not an estimate:")
for n in range(1, 6):
    gap = product_limit_gap(R, n)
    print(f"  n={n}  2 - partial^2 = {gap.numerator}/{gap.denominator}"
          f"  ~ {float(gap):.3e}")

print()
print("The gap's denominator is (r-1) c_n^2 / (r+1)-ish, and c squares")
print("each step, so the error is squared every stage: five stages in,")
print(f"the square of the partial product is within 1e-20 of 2"
      f" (gap {float(product_limit_gap(R, 5)):.2e}).")

print()
print("For r = 3 the c orbit is exactly the k = 2 Newton orbit, which")
print("ties the product back to the rest of the library:")
cs = [st.c for st in cd_run(3, 5)]
ns = [st.a for st in newton_run(2, 5)]
assert cs == ns[:6]
print(f"  c:      {cs[1:]}")
print(f"  newton: {ns[1:6]}")

print()
print("Every partial stays strictly below the limit:")
limit = Fraction(R + 1, R - 1)
for st in cd_run(R, 6)[1:]:
    assert st.partial ** 2 < limit
print("  confirmed through n = 6")

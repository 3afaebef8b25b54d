"""Newton's method on integer pairs: quadratic convergence made exact.

Run with: python3 demos/newton_digits.py
"""
from surdseq import Family, SeqSpec, coupled_iterate, newton_run
from surdseq.approx import floor_root_scaled

K = 2


def correct_places(a, b, k, limit=250):
    best = 0
    for d in range(1, limit + 1):
        if 10 ** d * a // b == floor_root_scaled(k, 1, d):
            best = d
        else:
            break
    return best


print(f"One Newton step maps a/b to (a^2 + {K} b^2) / (2ab); the orbit")
print("never leaves the integers and the correct digits double:")
for st in newton_run(K, 7):
    places = correct_places(st.a, st.b, K)
    shown = str(st.a) if st.a < 10**20 else str(st.a)[:20] + "..."
    print(f"  n={st.n}  a = {shown:<23} correct places: {places}")

print()
print("The residual a^2 - k b^2 is the exponent tower (k-1)^(2^n),")
print("carried along in the state as w:")
for st in newton_run(3, 5)[1:]:
    assert st.a ** 2 - 3 * st.b ** 2 == st.w == 2 ** (2 ** st.n)
print("  k=3: residuals 2^2, 2^4, 2^8, 2^16, 2^32 confirmed")

print()
print("Newton is not a new sequence: its terms sit inside the base pair")
print("at indices 2^n - 1, so the two engines cross-validate:")
base = coupled_iterate(SeqSpec(Family.AB, k=K), 128)
for st in newton_run(K, 6)[1:]:
    t = base[2 ** st.n - 1]
    assert (st.a, st.b) == (t.num, t.den)
    print(f"  newton n={st.n}  ==  base pair n={2 ** st.n - 1}")

print()
print("The generalized step handles sqrt(k/h) the same way:")
for st in newton_run(3, 4, h=2)[1:]:
    print(f"  n={st.n}  u/v = {st.a}/{st.b} = {st.a / st.b:.12f}")
print(f"  target sqrt(3/2) = {(3 / 2) ** 0.5:.12f}")

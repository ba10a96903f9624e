"""Level-rank duality: dual weights, partner tables, and how the garbled
labels of the rank-8 catalog are resolved mechanically.

The partner table couples each color-0 weight of SU(m)_n to a current
twist of its Young-diagram transpose in SU(n)_m; the coupled pair always
has integer total conformal weight, exactly.
"""

from fractions import Fraction

from holonet import dual_weight, exp_set, sun_datum, transpose_weight, vacuum_pairing
from holonet.weights import AffineWeight, enumerate_weights

W = AffineWeight

# -- the bijection on a small case -----------------------------------------

w = W(2, 3, (0,))
print(f"dual of the SU(2)_3 vacuum: {dual_weight(w)}  (SU(3)_2 vacuum)")
six = W(2, 10, (6,))
print(f"dual((6)) in SU(10)_2: {dual_weight(six)}, transpose: {transpose_weight(six)}")

# -- the vacuum partner table for (2, 10) ----------------------------------

table = vacuum_pairing(2, 10)
print("\nSU(2)_10 <-> SU(10)_2 vacuum pairs:")
for a, b in sorted(table.pairs.items()):
    total = a.conformal_weight() + b.conformal_weight()
    print(f"  ({a})  <->  ({b})   h + h = {total}")

# -- global dimensions obey the rank/level ratio ---------------------------

for m, n in [(2, 10), (3, 9), (4, 8)]:
    lhs = sun_datum(n, m).mu
    rhs = sun_datum(m, n).mu
    print(f"mu(su{n}_{m}) / mu(su{m}_{n}) = {lhs / rhs:.9f}   (n/m = {n / m})")

# -- pinning the rank-8 catalog weights -------------------------------------
# The spinor-sector branchings of su4_8 < spin20_1 must consist of weights
# with h = 5/4 mod 1; a scan finds the unique current orbit, and the
# partner table then determines the dual-side weights with no guesswork.

print("\nSU(4)_8 weights with h = 5/4 exactly:")
for x in enumerate_weights(4, 8):
    if x.conformal_weight() == Fraction(5, 4):
        print("  ", x, " color", x.color)

p48 = vacuum_pairing(4, 8)
v = p48.partner(W(4, 8, (1, 2, 1)).simple_current(1))
t = p48.partner(W(4, 8, (1, 1, 3)).simple_current(1))
print(f"partner orbit of (1,2,1) contains {v} with h = {v.conformal_weight()}")
print(f"partner orbit of (1,1,3) contains {t} with h = {t.conformal_weight()}")
print("(these are the weights stored in the bundled su8_4 catalog)")

# -- exponent sets ----------------------------------------------------------

print("\ncolor-0 weight counts:",
      {f"su{m}_{n}": len(exp_set(m, n)) for m, n in [(2, 10), (3, 9), (4, 8)]})

"""The bundled extension catalogs and their cross-checks.

Each catalog lists the irreducibles of a finite-index extension with
exact h mod 1, squared dimensions and restrictions; "verify" replays all
invariants including the transport of the conformal-inclusion vacuum
branching through the level-rank partner table.
"""

from holonet import (
    catalog,
    coupling_matrix,
    inclusion_table,
    mirror_spectrum,
    quadratic_form_consistency,
    vacuum_pairing,
    verify_catalog,
    verify_coupling,
)
from holonet.reporting import report_emit

for name in ("su10_2", "su9_3", "su8_4"):
    cat = catalog(name)
    print(f"{name}: {cat.size} irreps over {cat.base.name}, "
          f"mu = {cat.mu_exact}, index = {cat.extension_index():.7f}")

# -- the sqrt(2) family of the rank-10 catalog ------------------------------

cat = catalog("su10_2")
print("\ndimension-sqrt(2) family of su10_2:")
for i in range(5):
    label = f"s{i}"
    print(f"  {label}: dim^2 = {cat.dim_sq_of(label)}, "
          f"h = {cat.h_mod1(label)} (mod 1), restricts to {cat.restriction(label)}")
print("conj(s0) =", cat.conj("s0"), "   s0 x conj(s0) =", cat.fuse("s0", "s2"))

# -- mirror transport of the vacuum branchings ------------------------------

for name, key, m, n in [
    ("su10_2", "su2_10-spin5_1", 2, 10),
    ("su9_3", "su3_9-e6_1", 3, 9),
    ("su8_4", "su4_8-spin20_1", 4, 8),
]:
    row = inclusion_table(key).rows["1"]
    mirrored = mirror_spectrum(row, vacuum_pairing(m, n))
    same = mirrored == catalog(name).extension_spectrum()
    print(f"mirror of {key} vacuum row == {name} spectrum: {same}")

# -- coupling matrices commute with S and T ---------------------------------

print()
for key in ("su2_10-spin5_1", "su3_9-e6_1", "su4_8-spin20_1"):
    table = inclusion_table(key)
    z = coupling_matrix(table)
    report = verify_coupling(table)
    worst = max(c.residual for c in report.checks if c.residual is not None)
    print(f"{key}: Z is {z.shape[0]}x{z.shape[1]}, Z[0,0] = {z[0, 0]}, "
          f"commutator residual {worst:.1e}, pass = {report.passed}")

# -- quadratic-form eliminations --------------------------------------------
# The eight automorphisms of the su8_4 catalog can a priori form three
# groups of order 8; only the elementary-abelian one is consistent with
# the h values.

cat = catalog("su8_4")
auts = cat.automorphism_labels()
h_map = {a: cat.h_mod1(a) for a in auts}
mul = {(a, b): next(iter(cat.fuse(a, b))) for a in auts for b in auts}
print("\nZ2 x Z2 x Z2 consistent:", quadratic_form_consistency(h_map, mul).passed)

order = ["j0p0v0", "j0p1v0", "j0p0v1", "j0p1v1"]  # would force p^2 = (1/2)
cyc = {(x, y): order[(order.index(x) + order.index(y)) % 4]
       for x in order for y in order}
report = quadratic_form_consistency({x: h_map[x] for x in order}, cyc)
print("Z4 with p of order 4:", "consistent" if report.passed else
      f"inconsistent ({report.checks[0].details})")

print()
print(report_emit(verify_catalog(catalog("su10_2")), "text", reproducible=True))

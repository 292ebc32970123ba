"""Walk through D8 (the dihedral group of order 8) from its holomorph to the
complements of Hol inside the quasi-holomorph.

    python3 demos/d4_census.py
"""
from collections import Counter

from qhol import catalog, iso
from qhol.holomorph import build_hol
from qhol.perm_core import format_cycles
from qhol.quasi import build_qhol, families
from qhol.zappa import classify_up_to_conjugacy, find_complements

ctx = catalog.build("D:4")
print("lambda(G) generators:", [format_cycles(g) for g in ctx.lam.generators])

hc = build_hol(ctx)
print(f"|Aut| = {len(hc.auts)}, |Hol| = {hc.hol.order}")

fam = families(hc)
print(f"|S∩R| = {len(fam.sr)}, |Q| = {len(fam.q)}, |H| = {len(fam.h)}")
for b in fam.q.reps:
    print("  coset rep", format_cycles(b))

res = build_qhol(fam.q)
print("QHol:", res.verdict, "of order", res.union.order)

cs = find_complements(res.union, max_count=10 ** 6)
names = Counter(iso.name_group(c.table()) for c in cs.complements)
print(f"{len(cs.complements)} complements ({cs.nodes} nodes):", dict(names))
classes = classify_up_to_conjugacy(res.union, cs.complements)
print(f"{len(classes)} Hol-conjugacy classes of sizes {[len(c) for c in classes]}")

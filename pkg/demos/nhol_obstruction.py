"""C5⋊C8 with the generator acting by squaring: T(G) is a Klein four-group
but NHol(G) does not split over Hol(G).  One coset of order 2 in T(G) holds
no involution, so no complement can exist.

    python3 demos/nhol_obstruction.py
"""
from qhol import catalog
from qhol.holomorph import build_hol, nhol_split_verdict
from qhol.perm_core import format_cycles
from qhol.quasi import CosetUnion, families

for spec in ("SD:5:8:2", "DP:C:2*SD:5:4:2"):
    hc = build_hol(catalog.build(spec))
    fam = families(hc)
    cu = CosetUnion(hc, hc.hConjugators, members=hc.hSet)
    cu.verify_closed()
    print(f"{catalog.display_name(spec)}: |H| = {len(fam.h)}, "
          f"coset orders {[cu.coset_order(i) for i in range(cu.t)]}")
    sv = nhol_split_verdict(hc)
    ob = sv.obstruction
    print(f"  verdict {sv.status}; coset {ob['index']} has order {ob['coset_order']}, "
          f"Phi-fixed {ob['phi_fixed']}")
    print("  representative", format_cycles(ob["rep"]))

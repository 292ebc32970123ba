"""For C4×C2 the family S∩R is not closed under the conjugation product,
and normalizing is not a symmetric relation between its members.

    python3 demos/nonclosure_c4xc2.py
"""
from qhol import catalog
from qhol.holomorph import build_hol
from qhol.perm_core import compose, conjugate, format_cycles, generate, normalizes, parse_cycles
from qhol.quasi import families, member_normalizes

hc = build_hol(catalog.build("AB:4x2"))
lam = hc.ctx.lam
fam = families(hc)
print(f"|S∩R| = {len(fam.sr)}, |Q| = {len(fam.q)}")

a = parse_cycles("(2,5)(4,7)", 8)
b = parse_cycles("(4,8)", 8)


def conj_lambda(beta):
    return generate([conjugate(beta, g) for g in lam.generators], 8)


A, B = conj_lambda(a), conj_lambda(b)
for name, P in (("a", A), ("b", B)):
    print(f"{name} lambda {name}^-1 normalized by lambda: {normalizes(lam, P)}")

MA = hc.regular_from_perms(A.generators)
MB = hc.regular_from_perms(B.generators)
print("A normalizes B:", member_normalizes(hc, MA, MB))
print("B normalizes A:", member_normalizes(hc, MB, MA))

prod = compose(b, a)
esc = conj_lambda(prod)
print("product of representatives:", format_cycles(prod))
print("  image inside Hol:", all(hc.in_hol(g) for g in esc.generators))
print("  normalized by lambda:", normalizes(lam, esc))

"""Closed-form descriptions for cyclic p-groups and dihedral groups, each
checked against the brute-force families.

    python3 demos/closed_forms.py [--quick]
"""
import sys

from qhol import forms

quick = "--quick" in sys.argv
cyclic = [(2, 3), (3, 2), (5, 2)] if quick else [(2, k) for k in range(1, 7)] + [(3, 2), (3, 3)]
dihedral = [3, 4, 8] if quick else [3, 4, 5, 6, 8, 12, 16]

for p, n in cyclic:
    for rep in (forms.cyclic_identity_suite(p, n), forms.cyclic_oracle_check(p, n),
                forms.beta_parameterization_check(p, n)):
        print("\n".join(rep.lines()))
for n in dihedral:
    print("\n".join(forms.dihedral_suite(n).lines()))

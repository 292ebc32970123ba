import itertools
import math

import pytest
from hypothesis import given, strategies as st

from qhol import catalog, iso
from qhol.catalog import group_from_spec
from qhol.errors import BudgetExceeded


def brute_automorphisms(G):
    """Every bijection fixing 0 that respects the table."""
    out = []
    for rest in itertools.permutations(range(1, G.n)):
        f = (0,) + rest
        if all(f[G.mul[a][b]] == G.mul[f[a]][f[b]] for a in range(G.n) for b in range(G.n)):
            out.append(f)
    return sorted(out)


@pytest.mark.parametrize("spec", ["C:4", "AB:2x2", "D:3", "D:4", "DIC:2", "C:6"])
def test_automorphisms_against_brute_force(spec):
    G = group_from_spec(spec)
    assert iso.automorphisms(G) == brute_automorphisms(G)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 9, 12, 16, 20])
def test_aut_of_cyclic_is_euler_phi(n):
    assert len(iso.automorphisms(catalog.cyclic(n))) == sum(
        1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_aut_c16_not_cyclic():
    A = iso.automorphism_group(catalog.build("C:16"))
    assert A.order == 8
    assert max(iso.perm_group_table(A).orders) == 4


def test_aut_d4_is_d4():
    A = iso.perm_group_table(iso.automorphism_group(catalog.build("D:4")))
    assert A.n == 8 and iso.isomorphic(A, group_from_spec("D:4")) is not None


@pytest.mark.parametrize("a,b,same", [
    ("C:6", "DP:C:2*C:3", True),
    ("D:3", "C:6", False),
    ("D:4", "DIC:2", False),
    ("AB:4x2", "DP:C:4*C:2", True),
    ("C:12", "DP:C:4*C:3", True),
    ("C:12", "AB:2x6", False),
    ("AB:2x2x2", "AB:4x2", False),
])
def test_isomorphic(a, b, same):
    A, B = group_from_spec(a), group_from_spec(b)
    assert (iso.isomorphic(A, B) is not None) == same
    f = iso.isomorphism(A, B)
    if same:
        assert all(f[A.mul[x][y]] == B.mul[f[x]][f[y]] for x in range(A.n) for y in range(A.n))
        assert sorted(f) == list(range(B.n))
    else:
        assert f is None


@pytest.mark.parametrize("spec,name", [
    ("D:3", "S3"), ("C:6", "C6"), ("C:8", "C8"), ("DIC:2", "Q8"), ("AB:2x2", "C2×C2"),
])
def test_naming(spec, name):
    assert iso.name_group(group_from_spec(spec)) == name


def test_trivial_group_name():
    assert iso.name_group(catalog.cyclic(1)) == "1"


def test_name_of_permutation_group():
    P = catalog.build("D:4").lam
    assert iso.name_group(P) == "D8"


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceeded):
        iso.automorphisms(group_from_spec("AB:2x2x2x2"), budget=5)


SPECS = ["C:4", "AB:2x2", "D:3", "C:6", "D:4", "DIC:2", "AB:4x2", "C:8", "A4", "D:6", "DIC:3"]


@given(st.sampled_from(SPECS), st.randoms(use_true_random=False))
def test_fingerprint_invariant_under_relabeling(spec, rnd):
    G = group_from_spec(spec)
    perm = [0] + rnd.sample(range(1, G.n), G.n - 1)
    inv = [0] * G.n
    for i, p in enumerate(perm):
        inv[p] = i
    mul = [[perm[G.mul[inv[a]][inv[b]]] for b in range(G.n)] for a in range(G.n)]
    H = catalog.FiniteGroup(mul)
    assert iso.fingerprint(H) == iso.fingerprint(G)
    assert iso.isomorphic(G, H) is not None and iso.isomorphic(H, G) is not None


@given(st.sampled_from(SPECS), st.sampled_from(SPECS))
def test_isomorphic_symmetric_and_reflexive(a, b):
    A, B = group_from_spec(a), group_from_spec(b)
    assert iso.isomorphic(A, A) is not None
    ab = iso.isomorphic(A, B) is not None
    assert ab == (iso.isomorphic(B, A) is not None)
    if ab:
        assert iso.fingerprint(A) == iso.fingerprint(B)

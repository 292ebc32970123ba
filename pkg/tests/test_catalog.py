import json

import pytest
from hypothesis import given, strategies as st

from qhol import catalog
from qhol.catalog import (FiniteGroup, build, expected_for, group_from_spec, table_catalog,
                          verify_table)
from qhol.errors import InternalCheckError, SpecError
from qhol.perm_core import compose, format_cycles, is_regular, normalizes, parse_cycles

ALL_SPECS = [e.spec for e in table_catalog()]


def test_cyclic_labeling():
    ctx = build("C:8")
    assert ctx.labels[:3] == ["1", "σ", "σ^2"]
    assert format_cycles(ctx.group.lambda_perm(1)) == "(1,2,3,4,5,6,7,8)"


def test_dihedral_labeling_matches_listing():
    G = build("D:4").group
    # points 1..4 are x^0..x^3, points 5..8 are t, tx, tx^2, tx^3
    assert G.lambda_perm(1) == parse_cycles("(1,2,3,4)(5,8,7,6)", 8)
    assert G.lambda_perm(4) == parse_cycles("(1,5)(2,6)(3,7)(4,8)", 8)
    assert G.rho_perm(1) == parse_cycles("(1,4,3,2)(5,8,7,6)", 8)


def test_abelian_lambda_equals_rho():
    ctx = build("AB:2x2")
    assert ctx.lam.elements == ctx.rho.elements


def test_catalog_contents():
    specs = set(ALL_SPECS)
    assert {"SD:5:8:2", "SG16_13", "C:64"} <= specs
    assert len(ALL_SPECS) == len(specs) == 86
    G = group_from_spec("SD:5:8:2")
    a, b = 1, 5  # a = x, b generates C8
    assert G.n == 40 and G.orders[a] == 5 and G.orders[b] == 8
    m, inv = G.mul, G.inv
    assert m[m[b][a]][inv[b]] == m[a][a]


def test_every_row_has_expectations_and_order():
    for e in table_catalog():
        exp = expected_for(e.spec)
        assert exp is not None, e.spec
        assert group_from_spec(e.spec).n == int(e.gap_id.split(",")[0])


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_regular_context_invariants(spec):
    ctx = build(spec)
    assert ctx.spec == spec
    assert is_regular(ctx.lam) and is_regular(ctx.rho)
    assert normalizes(ctx.lam, ctx.rho) and normalizes(ctx.rho, ctx.lam)
    for a in ctx.lam.generators:
        for b in ctx.rho.generators:
            assert compose(a, b) == compose(b, a)
    assert len(ctx.lam.elements & ctx.rho.elements) == len(ctx.group.center())


def test_rho_is_right_inverse_multiplication():
    G = group_from_spec("D:3")
    for g in range(G.n):
        r = G.rho_perm(g)
        assert all(r[h] == G.mul[h][G.inv[g]] for h in range(G.n))


@pytest.mark.parametrize("bad", ["", "C:", "Q:8", "AB:0x2", "SD:5:4:5", "DP:C:2", "X:1", "C:x"])
def test_malformed_specs(bad):
    with pytest.raises(SpecError):
        group_from_spec(bad)


def test_degree_cap():
    with pytest.raises(SpecError):
        build("C:65")


def test_verify_table_rejects_nonassociative():
    # a Latin square with identity 0 that is not associative (order-5 loop)
    L = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(InternalCheckError):
        verify_table(L)


def test_context_json():
    d = json.loads(build("D:3").to_json())
    assert d["order"] == 6 and len(d["mul"]) == 6 and d["spec"] == "D:3"


@given(st.lists(st.integers(2, 4), min_size=1, max_size=3))
def test_abelian_products(dims):
    G = group_from_spec("AB:" + "x".join(map(str, dims)))
    assert G.is_abelian()
    n = 1
    for d in dims:
        n *= d
    assert G.n == n


@given(st.integers(2, 12), st.integers(1, 3))
def test_dihedral_and_dicyclic_orders(n, k):
    D = group_from_spec(f"D:{n}")
    assert D.n == 2 * n
    assert sum(1 for o in D.orders if o == 2) == (n if n % 2 else n + 1)
    Q = group_from_spec(f"DIC:{k + 1}")
    assert Q.n == 4 * (k + 1)
    assert sum(1 for o in Q.orders if o == 2) == 1


def test_direct_product_table():
    A, B = catalog.cyclic(2), catalog.cyclic(3)
    P = catalog.direct_product(A, B)
    assert isinstance(P, FiniteGroup) and P.n == 6 and P.is_abelian()
    assert max(P.orders) == 6

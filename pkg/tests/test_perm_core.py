import pytest
from hypothesis import given, strategies as st

from qhol import catalog
from qhol.errors import BudgetExceeded
from qhol.perm_core import (PermGroup, compose, conjugate, conjugate_group, cycles, format_cycles,
                            generate, identity, inverse, is_regular, normalizer_in, normalizes,
                            normalizes_bruteforce, parse_cycles, perm_from_json, perm_order,
                            perm_to_json, power)


def perms(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda d: st.permutations(list(range(d))).map(tuple))


def perm_pairs(max_degree=8):
    return st.integers(1, max_degree).flatmap(
        lambda d: st.tuples(st.permutations(list(range(d))).map(tuple),
                            st.permutations(list(range(d))).map(tuple)))


def test_compose_convention():
    # q acts first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    p, q = parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3)
    assert compose(p, q) == parse_cycles("(1,2,3)", 3)
    c = (1, 2, 0)
    assert compose(c, c) == (2, 0, 1)
    assert compose(c, identity(3)) == c


def test_degree_mismatch():
    with pytest.raises(ValueError):
        compose((0, 1), (0, 1, 2))


@given(perms())
def test_inverse_and_order(p):
    d = len(p)
    assert compose(p, inverse(p)) == identity(d)
    k = perm_order(p)
    assert power(p, k) == identity(d)
    assert all(power(p, j) != identity(d) for j in range(1, k))


@given(perms())
def test_cycle_text_roundtrip(p):
    assert parse_cycles(format_cycles(p), len(p)) == p
    assert perm_from_json(perm_to_json(p)) == p
    assert sum(len(c) for c in cycles(p)) <= len(p)


@given(perm_pairs(6))
def test_generated_group_laws(pq):
    p, q = pq
    G = generate([p, q], len(p))
    assert identity(len(p)) in G.elements
    assert p in G and q in G
    for g in G.elements:
        assert G.order % perm_order(g) == 0
    assert generate(list(G.elements), len(p)).elements == G.elements


@given(perm_pairs(6), perms(6))
def test_normalizes_matches_bruteforce(pq, b):
    p, q = pq
    if len(b) != len(p):
        return
    A = generate([b], len(b))
    N = generate([p, q], len(p))
    assert normalizes(A, N) == normalizes_bruteforce(A, N)


@given(perm_pairs(6), perms(6))
def test_conjugate_group_distributes(ab, c):
    a, b = ab
    if len(c) != len(a):
        return
    N = generate([c], len(c))
    lhs = conjugate_group(compose(a, b), N)
    rhs = conjugate_group(a, conjugate_group(b, N))
    assert lhs.elements == rhs.elements
    assert lhs.order == N.order


def test_generate_examples():
    assert generate([(1, 2, 3, 0)], 4).order == 4
    ctx = catalog.build("D:4")
    lx = parse_cycles("(1,2,3,4)(5,8,7,6)", 8)
    lt = parse_cycles("(1,5)(2,6)(3,7)(4,8)", 8)
    assert generate([lx, lt], 8).elements == ctx.lam.elements


def test_hol_s3_is_lambda_times_rho():
    ctx = catalog.build("D:3")
    from qhol.iso import automorphism_group
    A = automorphism_group(ctx)
    hol = generate(list(ctx.rho.generators) + list(A.generators), 6)
    assert hol.order == 36
    lr = generate(list(ctx.lam.generators) + list(ctx.rho.generators), 6)
    assert lr.elements == hol.elements


def test_generate_cap():
    with pytest.raises(BudgetExceeded) as exc:
        generate([parse_cycles("(1,2,3,4,5,6,7)", 7), parse_cycles("(1,2)", 7)], 7, cap=100)
    assert exc.value.partial >= 100


def test_is_regular():
    assert is_regular(catalog.build("C:4").lam)
    assert not is_regular(generate([parse_cycles("(1,2)", 4)], 4))
    from qhol.iso import automorphism_group
    assert not is_regular(automorphism_group(catalog.build("AB:2x2")))


def test_normalizer_in_examples():
    ctx = catalog.build("D:4")
    Z = generate([ctx.group.lambda_perm(2)], 8)  # lambda(x^2), central
    assert normalizer_in(ctx.lam, Z).elements == ctx.lam.elements
    assert conjugate_group(identity(8), ctx.lam).elements == ctx.lam.elements


def test_conjugate_is_b_p_binv():
    b, p = (1, 2, 0), (1, 0, 2)
    assert conjugate(b, p) == compose(compose(b, p), inverse(b))


def test_permgroup_membership_predicate():
    G = PermGroup(3, [(1, 2, 0)], member=lambda x: x in {(0, 1, 2), (1, 2, 0), (2, 0, 1)})
    assert (2, 0, 1) in G and (1, 0, 2) not in G

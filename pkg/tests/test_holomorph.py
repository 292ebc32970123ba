import pytest

from conftest import SMALL, fams, hol
from qhol import catalog
from qhol.holomorph import build_hol, compute_H, nhol_split_verdict, order_obstruction
from qhol.perm_core import compose, conjugate, generate, inverse, normalizer_in
from qhol.quasi import CosetUnion


@pytest.mark.parametrize("spec,order", [("C:4", 8), ("D:3", 36), ("AB:2x2", 24),
                                        ("DIC:2", 192), ("C:64", 2048)])
def test_hol_order(spec, order):
    hc = hol(spec)
    assert hc.hol.order == order == hc.n * len(hc.auts)


@pytest.mark.parametrize("spec", SMALL)
def test_pair_arithmetic_matches_permutations(spec):
    hc = hol(spec)
    A = len(hc.auts)
    pairs = [(g, a) for g in range(hc.n) for a in range(A)][:: max(1, hc.n * A // 40)]
    orders = hc.pair_orders()
    for p in pairs:
        P = hc.pair_perm(p)
        assert hc.perm_pair(P) == p
        assert hc.pair_perm(hc.pinv(p)) == inverse(P)
        assert orders[p[0]][p[1]] == hc.pair_order(p)
        for q in pairs[:6]:
            assert hc.pair_perm(hc.pmul(p, q)) == compose(P, hc.pair_perm(q))


@pytest.mark.parametrize("spec", ["D:3", "C:6", "DIC:2", "AB:2x2"])
def test_hol_is_normalizer_of_lambda(spec):
    """Norm_Sym(G)(lambda) computed by brute force equals Hol."""
    hc = hol(spec)
    sym = generate([tuple([1, 0] + list(range(2, hc.n))),
                    tuple(list(range(1, hc.n)) + [0])], hc.n, cap=10 ** 6)
    N = normalizer_in(sym, hc.ctx.lam)
    assert N.elements == hc.hol.elements


def test_rho_pairs_give_rho():
    hc = hol("D:4")
    for g in range(hc.n):
        assert hc.pair_perm(hc.rho_pair(g)) == hc.ctx.group.rho_perm(g)


def test_h_of_s3_is_lambda_and_rho():
    f = fams("D:3")
    rho = hol("D:3").regular_from_perms(hol("D:3").ctx.rho.generators)
    assert {N.gamma for N in f.h} == {(0,) * 6, rho.gamma}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 24])
def test_h_of_cyclic_groups(n):
    """T(C_n) has order 2 exactly when 8 divides n."""
    assert len(fams(f"C:{n}").h) == (2 if n % 8 == 0 else 1)


@pytest.mark.parametrize("spec", SMALL)
def test_h_members_normal_and_conjugators(spec):
    hc = hol(spec)
    H = fams(spec).h
    assert H[0].gamma == (0,) * hc.n
    for N, b in zip(H, hc.hConjugators):
        assert hc.normal_in_hol(N)
        for g in hc.ctx.lam.generators:
            assert N._member_test(conjugate(b, g))
        # beta normalizes Hol
        for g in hc.hol.generators:
            assert hc.in_hol(conjugate(b, g))


def test_compute_h_rejects_missing_lambda():
    hc = hol("C:4")
    with pytest.raises(Exception):
        compute_H(hc, fams("C:4").sr.members[1:])


def test_nhol_split_for_dihedral():
    for n in (3, 4, 6):
        assert nhol_split_verdict(hol(f"D:{n}")).status == "split"


def test_nhol_trivial():
    sv = nhol_split_verdict(hol("C:6"))
    assert sv.status == "split" and sv.notes == ["T(G) is trivial"]


@pytest.mark.parametrize("spec", ["SD:5:8:2", "DP:C:2*SD:5:4:2"])
def test_nhol_not_split(spec):
    hc = hol(spec)
    fams(spec)
    assert len(hc.hSet) == 4
    cu = CosetUnion(hc, hc.hConjugators, members=hc.hSet)
    assert cu.verify_closed().closed
    # T(G) is Klein four: every non-identity coset has order 2
    assert [cu.coset_order(i) for i in range(1, 4)] == [2, 2, 2]
    sv = nhol_split_verdict(hc)
    assert sv.status == "not-split"
    ob = sv.obstruction
    assert ob is not None and ob["coset_order"] == 2 and ob["phi_fixed"]
    assert not cu.coset_has_element_of_order(ob["index"], 2)
    assert order_obstruction(cu) == ob


def test_build_hol_from_context():
    hc = build_hol(catalog.build("AB:4x2"))
    assert len(hc.auts) == 8 and hc.aut_gens
